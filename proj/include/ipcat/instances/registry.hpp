#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "ipcat/unitary.hpp"
#include "ipcat/instances/finordrev.hpp"
#include "ipcat/instances/finrel.hpp"
#include "ipcat/instances/groupoid.hpp"
#include "ipcat/instances/matrig.hpp"
#include "ipcat/instances/presentation.hpp"
#include "ipcat/instances/srgraph.hpp"
#include "ipcat/instances/twistedmat.hpp"

namespace ipcat {

/// A category with its involution and, when it has one, a unitary structure.
/// `ref` is the {"instance", "params"} pair that rebuilds it.
template <Category C>
struct Bundle {
  std::shared_ptr<const C> cat;
  Involution<C> inv;
  std::optional<UnitaryStructure<C>> unit;
  json ref;
};

using AnyInstance = std::variant<Bundle<FinRel>, Bundle<MatRig<Boolean>>, Bundle<MatRig<mpz_class>>,
                                 Bundle<MatRig<GaussQ>>, Bundle<Groupoid>, Bundle<SRGraph>, Bundle<FinOrdRev>,
                                 Bundle<TwistedMat>, Bundle<Presentation>>;

template <Category C>
Bundle<C> make_bundle(std::shared_ptr<const C> c, json ref, bool unitary_identity) {
  Bundle<C> b{c, involution_of(c), std::nullopt, std::move(ref)};
  if (unitary_identity) b.unit = UnitaryStructure<C>{[c](const ObjOf<C>& x) { return c->id(x); }};
  return b;
}

inline Bundle<FinRel> finrel_bundle(int bound) {
  return make_bundle(std::make_shared<const FinRel>(bound), json{{"instance", "finrel"}, {"params", {{"bound", bound}}}},
                     true);
}

template <class T>
Bundle<MatRig<T>> matrig_bundle(std::size_t bound) {
  const std::string id = std::string("mat-") + RigTraits<T>::name;
  return make_bundle(std::make_shared<const MatRig<T>>(bound), json{{"instance", id}, {"params", {{"bound", bound}}}},
                     true);
}

/// Gaussian matrices with involutor -1 and phi = i: strict on objects but
/// with a nontrivial involutor.
inline Bundle<MatRig<GaussQ>> phasemat_bundle(std::size_t bound) {
  auto c = std::make_shared<const MatRig<GaussQ>>(bound);
  Involution<MatRig<GaussQ>> inv{[](std::size_t n) { return n; },
                                 [c](const MatRig<GaussQ>::Mor& f) { return c->dag_mor(f); },
                                 [c](std::size_t n) { return c->scalar(n, GaussQ(-1)); }};
  UnitaryStructure<MatRig<GaussQ>> u{[c](std::size_t n) { return c->scalar(n, GaussQ::i()); }};
  return {c, inv, u, json{{"instance", "phase-mat"}, {"params", {{"bound", bound}}}}};
}

/// Untwisted groups carry phi = id; the twisted S3 carries phi = t.
inline Bundle<Groupoid> groupoid_bundle(const std::string& group) {
  std::shared_ptr<const Groupoid> c;
  if (group == "s3") c = std::make_shared<const Groupoid>(Groupoid::s3(false));
  else if (group == "s3-twisted") c = std::make_shared<const Groupoid>(Groupoid::s3(true));
  else if (group == "z4") c = std::make_shared<const Groupoid>(Groupoid::cyclic(4));
  else throw UnknownInstance("unknown group " + group);
  auto b = make_bundle(c, json{{"instance", "groupoid"}, {"params", {{"group", group}}}}, false);
  b.unit = UnitaryStructure<Groupoid>{[c](int) { return c->element(c->twist()); }};
  return b;
}

inline Bundle<SRGraph> srgraph_bundle(int bound) {
  return make_bundle(std::make_shared<const SRGraph>(bound),
                     json{{"instance", "srgraph"}, {"params", {{"bound", bound}}}}, false);
}

inline Bundle<FinOrdRev> finordrev_bundle(int k) {
  return make_bundle(std::make_shared<const FinOrdRev>(k), json{{"instance", "finordrev"}, {"params", {{"k", k}}}},
                     false);
}

inline Bundle<TwistedMat> twistedmat_bundle(std::size_t bound, std::vector<GaussQ> samples = TwistedMat::default_samples(),
                                            std::vector<mpq_class> weights = {}) {
  json params{{"bound", bound}};
  json sj = json::array();
  for (const auto& s : samples) sj.push_back(RigTraits<GaussQ>::to_json(s));
  params["samples"] = sj;
  auto c = std::make_shared<const TwistedMat>(bound, std::move(samples), std::move(weights));
  json wj = json::array();
  for (const auto& w : c->weights()) wj.push_back(detail::rational_json(w));
  params["weights"] = wj;
  Bundle<TwistedMat> b{c, involution_of(c), std::nullopt, json{{"instance", "twistedmat"}, {"params", params}}};
  b.unit = UnitaryStructure<TwistedMat>{[c](const TwObj& x) { return c->phi(x); }};
  return b;
}

inline Bundle<Presentation> presentation_bundle(const json& j) {
  auto c = std::make_shared<const Presentation>(Presentation::from_json(j));
  Bundle<Presentation> b{c, involution_of(c), std::nullopt, json()};
  if (c->phi_table()) b.unit = UnitaryStructure<Presentation>{[c](const std::string& a) { return *c->phi(a); }};
  return b;
}

namespace detail {

inline int int_param(const json& params, const char* key, int fallback) {
  if (!params.contains(key)) return fallback;
  if (!params[key].is_number_integer()) throw TypeError(std::string("parameter ") + key + " must be an integer");
  return params[key].get<int>();
}

}  // namespace detail

/// Instance ids: finrel, mat-bool, mat-int, mat-gauss, phase-mat, groupoid
/// (params.group in s3, z4, s3-twisted), srgraph, finordrev, twistedmat.
inline AnyInstance build_instance(const std::string& id, const json& params = json::object()) {
  const json p = params.is_null() ? json::object() : params;
  if (id == "finrel") return finrel_bundle(detail::int_param(p, "bound", 2));
  if (id == "mat-bool") return matrig_bundle<Boolean>(detail::int_param(p, "bound", 2));
  if (id == "mat-int") return matrig_bundle<mpz_class>(detail::int_param(p, "bound", 2));
  if (id == "mat-gauss") return matrig_bundle<GaussQ>(detail::int_param(p, "bound", 2));
  if (id == "phase-mat") return phasemat_bundle(detail::int_param(p, "bound", 2));
  if (id == "groupoid") return groupoid_bundle(p.value("group", std::string("s3")));
  if (id == "srgraph") return srgraph_bundle(detail::int_param(p, "bound", 3));
  if (id == "finordrev") return finordrev_bundle(detail::int_param(p, "k", 2));
  if (id == "twistedmat") {
    std::vector<GaussQ> samples = TwistedMat::default_samples();
    if (p.contains("samples")) {
      samples.clear();
      for (const auto& s : p["samples"]) samples.push_back(RigTraits<GaussQ>::from_json(s));
    }
    std::vector<mpq_class> weights;
    for (const auto& w : p.value("weights", json::array())) weights.push_back(detail::rational_from_json(w));
    return twistedmat_bundle(detail::int_param(p, "bound", 2), std::move(samples), std::move(weights));
  }
  throw UnknownInstance("unknown instance id " + id);
}

}  // namespace ipcat
