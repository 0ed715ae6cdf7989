#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ipcat/core/budget.hpp"
#include "ipcat/core/errors.hpp"
#include "ipcat/core/law_report.hpp"

namespace ipcat {

/// A morphism src -> tgt carrying an instance-defined payload (relation,
/// matrix, group element, bijection, ...). Two morphisms are equal iff all
/// three fields agree; payloads are kept in canonical form by their instance.
template <class O, class P>
struct Morphism {
  O src;
  O tgt;
  P payload;

  friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// Composition is diagrammatic throughout: compose(f, g) is "f then g" and
/// requires tgt(f) == src(g).
///
/// Hom-sets are addressed through a *support*: for a finite hom-set the
/// support is the hom-set itself; for an infinite one it is a bounded
/// candidate family (e.g. matrices with entries from a fixed sample set) used
/// for sampling and for finite searches.
template <class C>
concept Category = requires(const C& c, const typename C::Obj& a, const typename C::Mor& f,
                            std::uint64_t i, const json& j) {
  typename C::Obj;
  typename C::Payload;
  requires std::same_as<typename C::Mor, Morphism<typename C::Obj, typename C::Payload>>;
  requires std::equality_comparable<typename C::Obj>;
  requires std::equality_comparable<typename C::Payload>;
  { c.name() } -> std::convertible_to<std::string>;
  { c.objects() } -> std::convertible_to<std::vector<typename C::Obj>>;
  { c.id(a) } -> std::same_as<typename C::Mor>;
  { c.compose(f, f) } -> std::same_as<typename C::Mor>;
  { c.hom_is_finite(a, a) } -> std::same_as<bool>;
  { c.support_size(a, a) } -> std::convertible_to<std::uint64_t>;
  { c.support_at(a, a, i) } -> std::same_as<typename C::Mor>;
  { c.inverse(f) } -> std::same_as<std::optional<typename C::Mor>>;
  { c.obj_json(a) } -> std::same_as<json>;
  { c.payload_json(f.payload) } -> std::same_as<json>;
  { c.parse_obj(j) } -> std::same_as<typename C::Obj>;
  { c.parse_mor(a, a, j) } -> std::same_as<typename C::Mor>;
};

template <Category C>
using ObjOf = typename C::Obj;
template <Category C>
using MorOf = typename C::Mor;

template <Category C>
json mor_json(const C& c, const MorOf<C>& f) {
  return json{{"src", c.obj_json(f.src)}, {"tgt", c.obj_json(f.tgt)}, {"payload", c.payload_json(f.payload)}};
}

template <Category C>
std::string obj_key(const C& c, const ObjOf<C>& a) {
  return c.obj_json(a).dump();
}

/// Builds {"name": morphism-json, ...} for counterexample witnesses.
template <Category C, class... Rest>
json named(const C& c, std::string_view name, const MorOf<C>& f, const Rest&... rest) {
  json j = json::object();
  j[std::string(name)] = mor_json(c, f);
  if constexpr (sizeof...(rest) > 0) j.update(named(c, rest...));
  return j;
}

template <Category C>
json named_obj(const C& c, std::string_view name, const ObjOf<C>& a) {
  return json{{std::string(name), c.obj_json(a)}};
}

namespace detail {

template <Category C>
[[noreturn]] void throw_not_composable(const C& c, const MorOf<C>& f, const MorOf<C>& g) {
  throw TypeError("cannot compose " + mor_json(c, f).dump() + " ; " + mor_json(c, g).dump() +
                  ": target " + obj_key(c, f.tgt) + " differs from source " + obj_key(c, g.src));
}

}  // namespace detail

template <class O, class P>
bool is_endo(const Morphism<O, P>& f) {
  return f.src == f.tgt;
}

/// The instance's inverse, validated as a two-sided inverse.
template <Category C>
std::optional<MorOf<C>> checked_inverse(const C& c, const MorOf<C>& f) {
  auto g = c.inverse(f);
  if (!g) return std::nullopt;
  if (g->src != f.tgt || g->tgt != f.src) return std::nullopt;
  if (c.compose(f, *g) != c.id(f.src) || c.compose(*g, f) != c.id(f.tgt)) return std::nullopt;
  return g;
}

template <Category C>
MorOf<C> inverse_of(const C& c, const MorOf<C>& f) {
  auto g = checked_inverse(c, f);
  if (!g) throw NotInvertible("not invertible: " + mor_json(c, f).dump());
  return *g;
}

/// Object list a law checker looks at under `b`.
template <Category C>
std::vector<ObjOf<C>> budget_objects(const C& c, const SampleBudget& b) {
  std::vector<ObjOf<C>> objs = c.objects();
  if (objs.size() > b.max_objects) objs.resize(b.max_objects);
  return objs;
}

/// Whole support of hom(a, b): the hom-set when finite, otherwise the
/// instance's bounded candidate family. Used by finite searches.
template <Category C>
std::vector<MorOf<C>> candidates(const C& c, const ObjOf<C>& a, const ObjOf<C>& b,
                                 std::uint64_t cap = 1'000'000) {
  const std::uint64_t n = c.support_size(a, b);
  if (n > cap) {
    throw BudgetExceeded("candidate family of size " + std::to_string(n) + " exceeds cap " +
                         std::to_string(cap));
  }
  std::vector<MorOf<C>> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(c.support_at(a, b, i));
  return out;
}

/// Morphisms of hom(a, b) under a budget.
///
/// Exhaustive mode returns the full hom-set and throws NotEnumerable for an
/// infinite one. Randomized mode returns up to max_morphisms_per_hom distinct
/// morphisms, reproducible from the seed; an endomorphism sample always leads
/// with the identity.
template <Category C>
std::vector<MorOf<C>> sample_morphisms(const C& c, const ObjOf<C>& a, const ObjOf<C>& b,
                                       const SampleBudget& budget) {
  const std::uint64_t n = c.support_size(a, b);
  if (budget.mode == SampleMode::exhaustive) {
    if (!c.hom_is_finite(a, b)) {
      throw NotEnumerable("hom(" + obj_key(c, a) + ", " + obj_key(c, b) + ") in " + c.name() +
                          " is infinite and cannot be enumerated exhaustively");
    }
    budget.charge(n, "hom-set enumeration");
    return candidates(c, a, b, budget.hard_cap);
  }

  std::vector<MorOf<C>> out;
  const std::size_t want = budget.max_morphisms_per_hom;
  if (want == 0 || n == 0) return out;
  if (a == b) out.push_back(c.id(a));

  const std::uint64_t seed = detail::splitmix64(
      budget.seed ^ detail::fnv1a(obj_key(c, a) + "|" + obj_key(c, b)));
  std::mt19937_64 rng(seed);
  std::unordered_set<std::uint64_t> seen;
  const std::uint64_t target = std::min<std::uint64_t>(want, n);
  std::uint64_t attempts = 0;
  const std::uint64_t max_attempts = 64 * target + 64;
  while (out.size() < target && seen.size() < n && attempts++ < max_attempts) {
    const std::uint64_t idx = rng() % n;
    if (!seen.insert(idx).second) continue;
    MorOf<C> f = c.support_at(a, b, idx);
    bool dup = false;
    for (const auto& g : out) dup = dup || g == f;
    if (!dup) out.push_back(std::move(f));
  }
  return out;
}

/// Default budget: exhaustive when every hom-set among the objects is finite,
/// randomized otherwise.
template <Category C>
SampleBudget default_budget(const C& c, std::size_t per_hom = 6, std::uint64_t seed = 0x5eedULL) {
  const auto objs = c.objects();
  for (const auto& a : objs)
    for (const auto& b : objs)
      if (!c.hom_is_finite(a, b)) return SampleBudget::randomized(per_hom, seed);
  SampleBudget b = SampleBudget::exhaustive();
  b.seed = seed;
  return b;
}

/// Budgeted objects and every budgeted hom-set among them, sampled once.
template <Category C>
class HomTable {
 public:
  HomTable(const C& c, const SampleBudget& b) : objects_(budget_objects(c, b)) {
    const std::size_t n = objects_.size();
    homs_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) homs_[i * n + j] = sample_morphisms(c, objects_[i], objects_[j], b);
  }

  const std::vector<ObjOf<C>>& objects() const { return objects_; }
  std::size_t size() const { return objects_.size(); }

  const std::vector<MorOf<C>>& operator()(std::size_t i, std::size_t j) const {
    return homs_[i * objects_.size() + j];
  }

  std::optional<std::size_t> index_of(const ObjOf<C>& a) const {
    for (std::size_t i = 0; i < objects_.size(); ++i)
      if (objects_[i] == a) return i;
    return std::nullopt;
  }

  /// Every sampled morphism, in (src, tgt) order.
  std::vector<MorOf<C>> all() const {
    std::vector<MorOf<C>> out;
    for (const auto& h : homs_) out.insert(out.end(), h.begin(), h.end());
    return out;
  }

  /// Number of composable (f, g) pairs.
  std::uint64_t composable_pairs() const {
    std::uint64_t n = 0;
    const std::size_t k = size();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t d = 0; d < k; ++d) n += (*this)(a, b).size() * (*this)(b, d).size();
    return n;
  }

 private:
  std::vector<ObjOf<C>> objects_;
  std::vector<std::vector<MorOf<C>>> homs_;
};

/// Accumulates cases of one law and keeps the first counterexample.
class LawCheck {
 public:
  explicit LawCheck(std::string name) { result_.name = std::move(name); }

  /// Evaluates `eval` (returning the pair of composites that must agree).
  /// TypeErrors raised while building the composites count as failures.
  template <Category C, class Eval, class Ctx>
  bool equal(const C& c, Eval&& eval, Ctx&& ctx) {
    ++result_.cases;
    try {
      auto [lhs, rhs] = eval();
      if (lhs == rhs) return true;
      if (!result_.failed()) {
        json w = ctx();
        w["lhs"] = mor_json(c, lhs);
        w["rhs"] = mor_json(c, rhs);
        record(std::move(w), "");
      }
    } catch (const TypeError& e) {
      if (!result_.failed()) record(ctx(), e.what());
    } catch (const NotInvertible& e) {
      if (!result_.failed()) record(ctx(), e.what());
    }
    return false;
  }

  /// Records one boolean case.
  template <class Pred, class Ctx>
  bool holds(Pred&& pred, Ctx&& ctx, std::string_view why = "") {
    ++result_.cases;
    try {
      if (pred()) return true;
      if (!result_.failed()) record(ctx(), std::string(why));
    } catch (const TypeError& e) {
      if (!result_.failed()) record(ctx(), e.what());
    } catch (const NotInvertible& e) {
      if (!result_.failed()) record(ctx(), e.what());
    }
    return false;
  }

  void fail(json witness, std::string detail) {
    if (!result_.failed()) record(std::move(witness), std::move(detail));
  }

  void note(std::string detail) { result_.detail = std::move(detail); }
  void mark_unknown(std::string detail) {
    if (!result_.failed()) {
      result_.status = Status::unknown;
      result_.detail = std::move(detail);
    }
  }

  bool failed() const { return result_.failed(); }
  std::uint64_t cases() const { return result_.cases; }

  CheckResult done() && { return std::move(result_); }

 private:
  void record(json w, std::string detail) {
    result_.status = Status::fail;
    result_.witness = std::move(w);
    if (!detail.empty()) result_.detail = std::move(detail);
  }

  CheckResult result_;
};

/// Identity and associativity on the budgeted fragment.
template <Category C>
LawReport check_category_laws(const C& c, const SampleBudget& b) {
  LawReport report("category", b);
  HomTable<C> t(c, b);
  const std::size_t n = t.size();

  std::uint64_t triples = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) triples += t(i, j).size() * t(j, k).size() * t(k, l).size();
  TupleSampler pick(b, triples, "associativity");

  LawCheck id_typing("identity typing");
  for (const auto& a : t.objects()) {
    id_typing.holds([&] { auto i = c.id(a); return i.src == a && i.tgt == a; },
                    [&] { return named_obj(c, "object", a); });
  }

  LawCheck typing("composition typing"), left("left identity"), right("right identity"), assoc("associativity");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& f : t(i, j)) {
        left.equal(c, [&] { return std::pair{c.compose(c.id(f.src), f), f}; }, [&] { return named(c, "f", f); });
        right.equal(c, [&] { return std::pair{c.compose(f, c.id(f.tgt)), f}; }, [&] { return named(c, "f", f); });
        for (std::size_t k = 0; k < n; ++k) {
          for (const auto& g : t(j, k)) {
            typing.holds([&] { auto fg = c.compose(f, g); return fg.src == f.src && fg.tgt == g.tgt; },
                         [&] { return named(c, "f", f, "g", g); });
            for (std::size_t l = 0; l < n; ++l) {
              for (const auto& h : t(k, l)) {
                if (!pick.take()) continue;
                assoc.equal(c, [&] { return std::pair{c.compose(c.compose(f, g), h), c.compose(f, c.compose(g, h))}; },
                            [&] { return named(c, "f", f, "g", g, "h", h); });
              }
            }
          }
        }
      }
    }
  }
  report.add(std::move(id_typing).done());
  report.add(std::move(typing).done());
  report.add(std::move(left).done());
  report.add(std::move(right).done());
  report.add(std::move(assoc).done());
  return report;
}

/// Explicit search for a two-sided inverse in a finite hom-set. Independent of
/// the instance's own inverse() and used to cross-check it.
template <Category C>
std::optional<MorOf<C>> find_inverse_by_search(const C& c, const MorOf<C>& f, std::uint64_t cap = 1'000'000) {
  if (!c.hom_is_finite(f.tgt, f.src)) throw NotEnumerable("inverse search needs a finite hom-set");
  for (const auto& g : candidates(c, f.tgt, f.src, cap)) {
    if (c.compose(f, g) == c.id(f.src) && c.compose(g, f) == c.id(f.tgt)) return g;
  }
  return std::nullopt;
}

}  // namespace ipcat
