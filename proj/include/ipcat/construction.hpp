#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ipcat/unitary.hpp"

namespace ipcat {

/// (X, h) with h : X -> X^† invertible and h ; (h^-1)^† = iota_X.
template <class O, class M>
struct PreUnitaryObject {
  O base;
  M h;

  friend bool operator==(const PreUnitaryObject&, const PreUnitaryObject&) = default;
};

template <Category C>
using PreUnitaryOf = PreUnitaryObject<ObjOf<C>, MorOf<C>>;

template <Category C>
std::vector<PreUnitaryOf<C>> enumerate_preunitary(const C& c, const Involution<C>& inv, const SampleBudget& b) {
  std::vector<PreUnitaryOf<C>> out;
  for (const auto& x : budget_objects(c, b))
    for (auto& h : preunitary_candidates(c, inv, x, b.hard_cap)) out.push_back({x, std::move(h)});
  return out;
}

/// Unitary(X): pre-unitary objects, morphisms of the base between their
/// underlying objects, (X, h)^† = (X^†, (h^-1)^†) and phi_{(X, h)} = h.
template <Category Base>
class UnitaryOf {
 public:
  using Obj = PreUnitaryOf<Base>;
  using Payload = typename Base::Payload;
  using Mor = Morphism<Obj, Payload>;

  UnitaryOf(std::shared_ptr<const Base> base, Involution<Base> inv, std::vector<Obj> objects)
      : base_(std::move(base)), inv_(std::move(inv)), objects_(std::move(objects)) {}

  std::string name() const { return "Unitary(" + base_->name() + ")"; }
  std::vector<Obj> objects() const { return objects_; }
  const Base& base() const { return *base_; }
  std::shared_ptr<const Base> base_ptr() const { return base_; }
  const Involution<Base>& base_involution() const { return inv_; }

  MorOf<Base> lower(const Mor& f) const { return {f.src.base, f.tgt.base, f.payload}; }
  Mor lift(const Obj& a, const Obj& b, const MorOf<Base>& f) const {
    if (f.src != a.base || f.tgt != b.base) throw TypeError("lift: endpoints do not match");
    return {a, b, f.payload};
  }

  Mor id(const Obj& a) const { return {a, a, base_->id(a.base).payload}; }

  Mor compose(const Mor& f, const Mor& g) const {
    if (f.tgt != g.src) detail::throw_not_composable(*this, f, g);
    return {f.src, g.tgt, base_->compose(lower(f), lower(g)).payload};
  }

  bool hom_is_finite(const Obj& a, const Obj& b) const { return base_->hom_is_finite(a.base, b.base); }
  std::uint64_t support_size(const Obj& a, const Obj& b) const { return base_->support_size(a.base, b.base); }
  Mor support_at(const Obj& a, const Obj& b, std::uint64_t i) const {
    return {a, b, base_->support_at(a.base, b.base, i).payload};
  }

  std::optional<Mor> inverse(const Mor& f) const {
    auto g = base_->inverse(lower(f));
    if (!g) return std::nullopt;
    return Mor{f.tgt, f.src, g->payload};
  }

  json obj_json(const Obj& a) const {
    return json{{"base", base_->obj_json(a.base)}, {"h", base_->payload_json(a.h.payload)}};
  }
  json payload_json(const Payload& p) const { return base_->payload_json(p); }
  Obj parse_obj(const json& j) const {
    const auto x = base_->parse_obj(j.at("base"));
    return {x, base_->parse_mor(x, inv_.dag(x), j.at("h"))};
  }
  Mor parse_mor(const Obj& a, const Obj& b, const json& j) const {
    return {a, b, base_->parse_mor(a.base, b.base, j).payload};
  }

  Obj dag_obj(const Obj& a) const { return {inv_.dag(a.base), inv_.dag(inverse_of(*base_, a.h))}; }
  Mor dag_mor(const Mor& f) const { return {dag_obj(f.tgt), dag_obj(f.src), inv_.dag(lower(f)).payload}; }
  Mor iota(const Obj& a) const { return {a, dag_obj(dag_obj(a)), inv_.iota(a.base).payload}; }
  Mor phi(const Obj& a) const { return {a, dag_obj(a), a.h.payload}; }

 private:
  std::shared_ptr<const Base> base_;
  Involution<Base> inv_;
  std::vector<Obj> objects_;
};

template <Category C>
std::shared_ptr<const UnitaryOf<C>> build_unitary_of(std::shared_ptr<const C> c, const Involution<C>& inv,
                                                     const SampleBudget& b) {
  return std::make_shared<const UnitaryOf<C>>(c, inv, enumerate_preunitary(*c, inv, b));
}

template <Category C>
UnitaryStructure<UnitaryOf<C>> canonical_unitary(std::shared_ptr<const UnitaryOf<C>> u) {
  return {[u](const PreUnitaryOf<C>& a) { return u->phi(a); }};
}

template <Category C>
bool is_strict(const C& c, const Involution<C>& inv, const SampleBudget& b) {
  for (const auto& x : budget_objects(c, b))
    if (inv.dag(x) != x || inv.iota(x) != c.id(x)) return false;
  return true;
}

/// X |-> (X, 1_X) into Unitary(X) for a strict dagger category.
template <Category C>
InvolutiveFunctor<C, UnitaryOf<C>> embed_dagger_into_unitary(std::shared_ptr<const C> c, const Involution<C>& inv,
                                                             std::shared_ptr<const UnitaryOf<C>> u,
                                                             const SampleBudget& b) {
  if (!is_strict(*c, inv, b)) throw TypeError("embedding into Unitary(X) needs a strict dagger category");
  const auto obj = [c](const ObjOf<C>& x) { return PreUnitaryOf<C>{x, c->id(x)}; };
  Functor<C, UnitaryOf<C>> base{c, u, obj, [obj](const MorOf<C>& f) {
    return Morphism<PreUnitaryOf<C>, typename C::Payload>{obj(f.src), obj(f.tgt), f.payload};
  }};
  return {base, inv, involution_of(u), [u, obj](const ObjOf<C>& x) { return u->id(obj(x)); }};
}

/// (X, h) |-> (F X, F(h) ; gamma_X), with preservator gamma.
template <Category S, Category T>
InvolutiveFunctor<UnitaryOf<S>, UnitaryOf<T>> transfer_functor(const InvolutiveFunctor<S, T>& F,
                                                               std::shared_ptr<const UnitaryOf<S>> us,
                                                               std::shared_ptr<const UnitaryOf<T>> ut) {
  if (F.base.source != us->base_ptr() || F.base.target != ut->base_ptr())
    throw ShapeError("transfer_functor: Unitary categories are not built on the functor's categories");
  auto tgt = F.base.target;
  const auto obj = [F, tgt](const PreUnitaryOf<S>& a) {
    return PreUnitaryOf<T>{F(a.base), tgt->compose(F(a.h), F.gamma(a.base))};
  };
  Functor<UnitaryOf<S>, UnitaryOf<T>> base{
      us, ut, obj, [F, us, obj](const Morphism<PreUnitaryOf<S>, typename S::Payload>& f) {
        return Morphism<PreUnitaryOf<T>, typename T::Payload>{obj(f.src), obj(f.tgt), F(us->lower(f)).payload};
      }};
  return {base, involution_of(us), involution_of(ut), [F, ut, obj, us](const PreUnitaryOf<S>& a) {
            const auto src = obj(us->dag_obj(a));
            return ut->lift(src, ut->dag_obj(obj(a)), F.gamma(a.base));
          }};
}

/// Every image object of a transferred functor is pre-unitary.
template <Category S, Category T>
LawReport check_transfer(const InvolutiveFunctor<UnitaryOf<S>, UnitaryOf<T>>& F, const SampleBudget& b) {
  const auto& us = *F.base.source;
  const auto& ut = *F.base.target;
  LawReport report("transfer", b);
  LawCheck pre("image is pre-unitary");
  for (const auto& a : budget_objects(us, b))
    pre.holds([&] { auto fa = F(a); return is_preunitary(ut.base(), ut.base_involution(), fa.h); },
              [&] { return named_obj(us, "object", a); });
  report.add(std::move(pre).done());
  return report;
}

/// Faithful: distinct budgeted maps stay distinct. Full: where both hom-sets
/// are finite, the image of hom(X, Y) is all of hom(F X, F Y).
template <Category S, Category T>
LawReport check_full_faithful(const Functor<S, T>& F, const SampleBudget& b) {
  const S& s = *F.source;
  const T& t = *F.target;
  LawReport report("full and faithful", b);
  LawCheck faithful("faithful"), full("full");
  const auto objs = budget_objects(s, b);
  for (const auto& x : objs)
    for (const auto& y : objs) {
      const auto hom = sample_morphisms(s, x, y, b);
      std::vector<MorOf<T>> image;
      for (const auto& f : hom) image.push_back(F(f));
      for (std::size_t i = 0; i < image.size(); ++i)
        for (std::size_t j = i + 1; j < image.size(); ++j)
          faithful.holds([&] { return !(image[i] == image[j]); }, [&] { return named(s, "f", hom[i], "g", hom[j]); });
      if (s.hom_is_finite(x, y) && t.hom_is_finite(F(x), F(y)))
        full.holds([&] { return t.support_size(F(x), F(y)) == s.support_size(x, y); },
                   [&] { return json{{"src", s.obj_json(x)}, {"tgt", s.obj_json(y)}}; },
                   "hom-set sizes differ");
    }
  report.add(std::move(faithful).done());
  report.add(std::move(full).done());
  return report;
}

}  // namespace ipcat
