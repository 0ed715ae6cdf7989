#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ipcat/adjoint.hpp"

namespace ipcat {

enum class Flag { yes, no, unknown };

inline std::string_view to_string(Flag f) {
  switch (f) {
    case Flag::yes: return "yes";
    case Flag::no: return "no";
    case Flag::unknown: return "unknown";
  }
  return "unknown";
}

inline Flag flag_of(bool b) { return b ? Flag::yes : Flag::no; }

/// A classifier verdict. `consistent` is false when the equivalent criteria
/// of one notion disagree on this morphism.
struct FlagResult {
  Flag value = Flag::unknown;
  bool consistent = true;
  json witness;
  std::string detail;
  std::vector<bool> criteria;

  json to_json() const {
    json j;
    j["value"] = std::string(to_string(value));
    j["consistent"] = consistent;
    if (!criteria.empty()) j["criteria"] = criteria;
    if (!witness.is_null()) j["witness"] = witness;
    if (!detail.empty()) j["detail"] = detail;
    return j;
  }
};

/// Shared context for the classifiers: category, involution, unitary
/// structure, its inner product and the budget used for quantified criteria.
template <Category C>
struct Classifier {
  std::shared_ptr<const C> cp;
  Involution<C> inv;
  UnitaryStructure<C> u;
  SampleBudget budget;
  InnerProduct<C> ip;
  HomTable<C> table;

  Classifier(std::shared_ptr<const C> c, Involution<C> i, UnitaryStructure<C> un, SampleBudget b)
      : cp(c), inv(std::move(i)), u(std::move(un)), budget(b), ip(ip_from_unitary(c, inv, u)), table(*c, b) {}

  const C& cat() const { return *cp; }
  MorOf<C> star(const MorOf<C>& f) const { return adjoint(*cp, inv, u, f); }

  /// Budgeted maps into x, led by the identity. Randomized budgets keep
  /// at most max_morphisms_per_hom of them.
  std::vector<MorOf<C>> into(const ObjOf<C>& x) const {
    std::vector<MorOf<C>> out{cp->id(x)};
    const std::size_t cap =
        budget.mode == SampleMode::exhaustive ? SIZE_MAX : std::max<std::size_t>(1, budget.max_morphisms_per_hom);
    if (auto xi = table.index_of(x))
      for (std::size_t a = 0; a < table.size(); ++a)
        for (const auto& f : table(a, *xi))
          if (out.size() < cap && !(f == out.front())) out.push_back(f);
    return out;
  }

  bool strict() const {
    for (const auto& x : table.objects())
      if (!(inv.dag(x) == x) || !(inv.iota(x) == cp->id(x)) || !(u(x) == cp->id(x))) return false;
    return true;
  }

  /// h ; h* = 1, cross-checked against <f;h|g;h> = <f|g> and
  /// h ; phi_Y ; h^† = phi_X.
  FlagResult isometry(const MorOf<C>& h) const {
    const C& c = *cp;
    FlagResult r;
    const bool iii = c.compose(h, star(h)) == c.id(h.src);
    const bool ii = c.compose(c.compose(h, u(h.tgt)), inv.dag(h)) == u(h.src);
    bool i = true;
    const auto fs = into(h.src);
    for (const auto& f : fs) {
      for (const auto& g : fs) {
        if (!(ip(c.compose(f, h), c.compose(g, h)) == ip(f, g))) {
          i = false;
          if (!iii) r.witness = named(c, "f", f, "g", g);
          break;
        }
      }
      if (!i) break;
    }
    r.criteria = {iii, i, ii};
    r.value = flag_of(iii);
    r.consistent = iii == i && iii == ii;
    if (!iii) r.detail = "h ; adj(h) is not the identity";
    return r;
  }

  /// Invertible with h^-1 = h*, cross-checked against h^† = phi_Y^-1 ; h^-1 ;
  /// phi_X, against "h and h* are isometries", and against "h is an
  /// invertible isometry".
  FlagResult unitary_map(const MorOf<C>& h) const {
    const C& c = *cp;
    FlagResult r;
    const auto hi = checked_inverse(c, h);
    const bool invertible = hi.has_value();
    const bool a = invertible && *hi == star(h);
    const bool b = invertible &&
                   inv.dag(h) == c.compose(c.compose(phi_inverse(c, u, h.tgt), *hi), u(h.src));
    const bool iso_h = isometry(h).value == Flag::yes;
    const bool iso_star = isometry(star(h)).value == Flag::yes;
    const bool cc = invertible && iso_h && iso_star;
    const bool d = invertible && iso_h;
    r.criteria = {a, b, cc, d};
    r.value = flag_of(a);
    r.consistent = a == b && a == cc && a == d;
    if (!invertible) r.detail = "not invertible";
    else if (!a) r.detail = "inverse differs from the adjoint";
    return r;
  }

  /// a = a*, cross-checked against a ; phi = phi ; a^† and
  /// <f;a|g> = <f|g;a>.
  FlagResult hermitian(const MorOf<C>& a) const {
    const C& c = *cp;
    if (!is_endo(a)) throw TypeError("hermitian: not an endomorphism");
    FlagResult r;
    const bool one = a == star(a);
    const bool two = c.compose(a, u(a.src)) == c.compose(u(a.src), inv.dag(a));
    bool three = true;
    const auto fs = into(a.src);
    for (const auto& f : fs) {
      for (const auto& g : fs)
        if (!(ip(c.compose(f, a), g) == ip(f, c.compose(g, a)))) {
          three = false;
          break;
        }
      if (!three) break;
    }
    r.criteria = {one, two, three};
    r.value = flag_of(one);
    r.consistent = one == two && one == three;
    if (!one) r.detail = "differs from its adjoint";
    return r;
  }

  /// f = <q|q> for some budgeted q : X -> Y. Without a witness the answer is
  /// unknown.
  FlagResult positive(const MorOf<C>& f) const {
    const C& c = *cp;
    if (f.tgt != inv.dag(f.src)) throw TypeError("positive: map is not of the form X -> X^†");
    FlagResult r;
    const bool is_strict = strict();
    std::vector<MorOf<C>> qs{c.id(f.src)};
    if (auto xi = table.index_of(f.src))
      for (std::size_t y = 0; y < table.size(); ++y)
        for (const auto& q : table((*xi), y)) qs.push_back(q);
    for (const auto& q : qs) {
      if (ip(q, q) == f) {
        r.value = Flag::yes;
        r.witness = named(c, "q", q);
        if (is_strict) r.consistent = c.compose(q, inv.dag(q)) == f;
        return r;
      }
    }
    r.value = Flag::unknown;
    r.detail = "no witness among " + std::to_string(qs.size()) + " budgeted maps";
    return r;
  }

  /// <f|f> ; phi_{X^†} = phi_X ; <f^†|f^†>.
  FlagResult normal(const MorOf<C>& f) const {
    const C& c = *cp;
    if (!is_endo(f)) throw TypeError("normal: not an endomorphism");
    FlagResult r;
    const auto lhs = c.compose(ip(f, f), u(inv.dag(f.src)));
    const auto rhs = c.compose(u(f.src), ip(inv.dag(f), inv.dag(f)));
    r.value = flag_of(lhs == rhs);
    if (lhs != rhs) {
      r.witness = json{{"lhs", mor_json(c, lhs)}, {"rhs", mor_json(c, rhs)}};
      r.detail = "the two sides of the normality equation differ";
    }
    return r;
  }
};

struct Classification {
  FlagResult isometry, unitary_map, hermitian, positive, normal;
  bool containments_hold = true;

  bool consistent() const {
    return containments_hold && isometry.consistent && unitary_map.consistent && hermitian.consistent &&
           positive.consistent && normal.consistent;
  }

  json to_json() const {
    json j;
    j["isometry"] = isometry.to_json();
    j["unitaryMap"] = unitary_map.to_json();
    j["hermitian"] = hermitian.to_json();
    j["positive"] = positive.to_json();
    j["normal"] = normal.to_json();
    j["consistent"] = consistent();
    return j;
  }
};

/// All five flags. Notions that need an endomorphism, or a map X -> X^†,
/// are "no" on other shapes.
template <Category C>
Classification classify(const Classifier<C>& k, const MorOf<C>& f) {
  Classification out;
  out.isometry = k.isometry(f);
  out.unitary_map = k.unitary_map(f);
  if (is_endo(f)) {
    out.hermitian = k.hermitian(f);
    out.normal = k.normal(f);
  } else {
    out.hermitian.value = out.normal.value = Flag::no;
    out.hermitian.detail = out.normal.detail = "not an endomorphism";
  }
  if (f.tgt == k.inv.dag(f.src)) {
    out.positive = k.positive(f);
  } else {
    out.positive.value = Flag::no;
    out.positive.detail = "not of the form X -> X^†";
  }
  const bool herm = out.hermitian.value == Flag::yes;
  const bool unit_endo = is_endo(f) && out.unitary_map.value == Flag::yes;
  out.containments_hold = !(herm || unit_endo) || out.normal.value == Flag::yes;
  return out;
}

template <Category C>
Classification classify(std::shared_ptr<const C> c, const Involution<C>& inv, const UnitaryStructure<C>& u,
                        const MorOf<C>& f, const SampleBudget& b) {
  return classify(Classifier<C>(c, inv, u, b), f);
}

template <Category C>
FlagResult is_isometry(std::shared_ptr<const C> c, const Involution<C>& inv, const UnitaryStructure<C>& u,
                       const MorOf<C>& h, const SampleBudget& b) {
  return Classifier<C>(c, inv, u, b).isometry(h);
}

template <Category C>
FlagResult is_unitary_map(std::shared_ptr<const C> c, const Involution<C>& inv, const UnitaryStructure<C>& u,
                          const MorOf<C>& h, const SampleBudget& b) {
  return Classifier<C>(c, inv, u, b).unitary_map(h);
}

template <Category C>
FlagResult is_hermitian(std::shared_ptr<const C> c, const Involution<C>& inv, const UnitaryStructure<C>& u,
                        const MorOf<C>& a, const SampleBudget& b) {
  return Classifier<C>(c, inv, u, b).hermitian(a);
}

template <Category C>
FlagResult is_positive(std::shared_ptr<const C> c, const Involution<C>& inv, const UnitaryStructure<C>& u,
                       const MorOf<C>& f, const SampleBudget& b) {
  return Classifier<C>(c, inv, u, b).positive(f);
}

template <Category C>
FlagResult is_normal(std::shared_ptr<const C> c, const Involution<C>& inv, const UnitaryStructure<C>& u,
                     const MorOf<C>& f, const SampleBudget& b) {
  return Classifier<C>(c, inv, u, b).normal(f);
}

/// Runs the classifier over every budgeted morphism: criteria agreement,
/// the two containments, closure of isometries under composition, and
/// "f unitary iff f^† unitary".
template <Category C>
LawReport check_special_maps(std::shared_ptr<const C> c, const Involution<C>& inv, const UnitaryStructure<C>& u,
                             const SampleBudget& b) {
  Classifier<C> k(c, inv, u, b);
  const auto& t = k.table;
  const std::size_t n = t.size();
  LawReport report("special maps", b);
  LawCheck iso("isometry criteria agree"), uni("unitary criteria agree"), herm("hermitian criteria agree");
  LawCheck hn("hermitian maps are normal"), un("unitary endomorphisms are normal");
  LawCheck comp("isometries compose"), dag("unitary iff dagger unitary");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& f : t(i, j)) {
        const auto ctx = [&] { return named(*c, "f", f); };
        const auto fi = k.isometry(f);
        iso.holds([&] { return fi.consistent; }, ctx);
        const auto fu = k.unitary_map(f);
        uni.holds([&] { return fu.consistent; }, ctx);
        dag.holds([&] { return (fu.value == Flag::yes) == (k.unitary_map(inv.dag(f)).value == Flag::yes); }, ctx);
        if (is_endo(f)) {
          const auto fh = k.hermitian(f);
          herm.holds([&] { return fh.consistent; }, ctx);
          const bool normal = k.normal(f).value == Flag::yes;
          if (fh.value == Flag::yes) hn.holds([&] { return normal; }, ctx);
          if (fu.value == Flag::yes) un.holds([&] { return normal; }, ctx);
        }
        if (fi.value != Flag::yes) continue;
        for (std::size_t l = 0; l < n; ++l)
          for (const auto& g : t(j, l))
            if (k.isometry(g).value == Flag::yes)
              comp.holds([&] { return k.isometry(c->compose(f, g)).value == Flag::yes; },
                         [&] { return named(*c, "f", f, "g", g); });
      }
  for (auto* chk : {&iso, &uni, &herm, &hn, &un, &comp, &dag}) report.add(std::move(*chk).done());
  return report;
}

}  // namespace ipcat
