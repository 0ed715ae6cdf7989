#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ipcat/involutive.hpp"

namespace ipcat {

/// The family phi_X : X -> X^†.
template <Category C>
struct UnitaryStructure {
  std::function<MorOf<C>(const ObjOf<C>&)> phi;

  MorOf<C> operator()(const ObjOf<C>& x) const { return phi(x); }
};

template <Category C>
MorOf<C> phi_inverse(const C& c, const UnitaryStructure<C>& u, const ObjOf<C>& x) {
  return inverse_of(c, u.phi(x));
}

/// A unitary structure given by an explicit table keyed by object.
template <Category C>
UnitaryStructure<C> tabulated_unitary(std::shared_ptr<const C> c, std::map<std::string, MorOf<C>> table) {
  return {[c, table = std::move(table)](const ObjOf<C>& x) {
    auto it = table.find(obj_key(*c, x));
    if (it == table.end()) throw MissingStructure("no unitary structure map at " + obj_key(*c, x));
    return it->second;
  }};
}

namespace law {
inline constexpr const char* phi_typing = "phi typing";
inline constexpr const char* phi_invertible = "phi invertible";
inline constexpr const char* phi_dagger = "phi of dagger is dagger of inverse";
inline constexpr const char* phi_iota = "phi then phi of dagger is iota";
}  // namespace law

template <Category C>
LawReport check_unitary(const C& c, const Involution<C>& inv, const UnitaryStructure<C>& u, const SampleBudget& b) {
  LawReport report("unitary", b);
  LawCheck typing(law::phi_typing), invertible(law::phi_invertible), dag(law::phi_dagger), iota(law::phi_iota);
  for (const auto& x : budget_objects(c, b)) {
    const auto ctx = [&] { return named_obj(c, "object", x); };
    typing.holds([&] { auto p = u(x); return p.src == x && p.tgt == inv.dag(x); }, ctx);
    invertible.holds([&] { return checked_inverse(c, u(x)).has_value(); }, ctx, "phi has no inverse");
    dag.equal(c, [&] { return std::pair{u(inv.dag(x)), inv.dag(phi_inverse(c, u, x))}; }, ctx);
    iota.equal(c, [&] { return std::pair{c.compose(u(x), u(inv.dag(x))), inv.iota(x)}; }, ctx);
  }
  report.add(std::move(typing).done());
  report.add(std::move(invertible).done());
  report.add(std::move(dag).done());
  report.add(std::move(iota).done());
  return report;
}

/// The four derived identities of a unitary structure.
template <Category C>
LawReport check_unitary_identities(const C& c, const Involution<C>& inv, const UnitaryStructure<C>& u,
                                   const SampleBudget& b) {
  LawReport report("unitary identities", b);
  LawCheck one("dagger of phi is inverse of phi at dagger");
  LawCheck two("phi is iota then dagger of phi");
  LawCheck three("inverse phi then iota is dagger of inverse phi");
  LawCheck four("iota, dagger of phi at dagger, inverse iota is inverse phi");
  for (const auto& x : budget_objects(c, b)) {
    const auto ctx = [&] { return named_obj(c, "object", x); };
    const auto xd = [&] { return inv.dag(x); };
    one.equal(c, [&] { return std::pair{inv.dag(u(x)), phi_inverse(c, u, xd())}; }, ctx);
    two.equal(c, [&] { return std::pair{u(x), c.compose(inv.iota(x), inv.dag(u(x)))}; }, ctx);
    three.equal(c, [&] {
      const auto pinv = phi_inverse(c, u, x);
      return std::pair{c.compose(pinv, inv.iota(x)), inv.dag(pinv)};
    }, ctx);
    four.equal(c, [&] {
      const auto lhs = c.compose(c.compose(inv.iota(xd()), inv.dag(u(xd()))), inverse_of(c, inv.iota(x)));
      return std::pair{lhs, phi_inverse(c, u, x)};
    }, ctx);
  }
  report.add(std::move(one).done());
  report.add(std::move(two).done());
  report.add(std::move(three).done());
  report.add(std::move(four).done());
  return report;
}

/// The preservator a unitary functor is forced to have:
/// gamma_X = F(phi_X^-1) ; phi'_{F X}.
template <Category S, Category T>
MorOf<T> forced_preservator(const Functor<S, T>& F, const UnitaryStructure<S>& us, const UnitaryStructure<T>& ut,
                            const ObjOf<S>& x) {
  return F.target->compose(F(phi_inverse(*F.source, us, x)), ut(F(x)));
}

/// F(phi_X) ; gamma_X = phi'_{F X}, plus agreement with the forced preservator.
template <Category S, Category T>
LawReport check_unitary_functor(const InvolutiveFunctor<S, T>& F, const UnitaryStructure<S>& us,
                                const UnitaryStructure<T>& ut, const SampleBudget& b) {
  const S& s = *F.base.source;
  const T& t = *F.base.target;
  LawReport report("unitary functor", b);
  LawCheck unit("unitary functor"), forced("preservator is forced");
  for (const auto& x : budget_objects(s, b)) {
    const auto ctx = [&] { return named_obj(s, "object", x); };
    unit.equal(t, [&] { return std::pair{t.compose(F(us(x)), F.gamma(x)), ut(F(x))}; }, ctx);
    forced.equal(t, [&] { return std::pair{F.gamma(x), forced_preservator(F.base, us, ut, x)}; }, ctx);
  }
  report.add(std::move(unit).done());
  report.add(std::move(forced).done());
  return report;
}

/// The unitary functor with base F and its forced preservator.
template <Category S, Category T>
InvolutiveFunctor<S, T> unitary_functor(const Functor<S, T>& F, const Involution<S>& si, const Involution<T>& ti,
                                        const UnitaryStructure<S>& us, const UnitaryStructure<T>& ut) {
  return {F, si, ti, [F, us, ut](const ObjOf<S>& x) { return forced_preservator(F, us, ut, x); }};
}

/// h : X -> X^† invertible with h ; (h^-1)^† = iota_X.
template <Category C>
bool is_preunitary(const C& c, const Involution<C>& inv, const MorOf<C>& h) {
  if (h.tgt != inv.dag(h.src)) return false;
  auto hi = checked_inverse(c, h);
  if (!hi) return false;
  return c.compose(h, inv.dag(*hi)) == inv.iota(h.src);
}

/// Every pre-unitary h : X -> X^† in the support of hom(X, X^†).
template <Category C>
std::vector<MorOf<C>> preunitary_candidates(const C& c, const Involution<C>& inv, const ObjOf<C>& x,
                                            std::uint64_t cap = 1'000'000) {
  std::vector<MorOf<C>> out;
  for (const auto& h : candidates(c, x, inv.dag(x), cap))
    if (is_preunitary(c, inv, h)) out.push_back(h);
  return out;
}

template <Category C>
struct UnitarySearch {
  std::optional<UnitaryStructure<C>> found;
  std::map<std::string, MorOf<C>> table;
  std::optional<ObjOf<C>> obstruction;
  std::string detail;
};

/// Finite search for a unitary structure.
///
/// Objects fall into orbits X, X^†, X^††, ... Choosing phi at the first
/// object of an orbit determines the rest through phi_{X^†} = (phi_X^-1)^†;
/// a choice survives when the orbit closes up consistently and every object
/// satisfies phi_X ; phi_{X^†} = iota_X.
template <Category C>
UnitarySearch<C> search_unitary_structure(std::shared_ptr<const C> cp, const Involution<C>& inv,
                                          std::uint64_t cap = 1'000'000) {
  const C& c = *cp;
  UnitarySearch<C> out;
  const auto objs = c.objects();
  std::map<std::string, bool> seen;
  for (const auto& x0 : objs) {
    if (seen[obj_key(c, x0)]) continue;
    std::vector<ObjOf<C>> orbit{x0};
    for (;;) {
      auto next = inv.dag(orbit.back());
      if (next == x0) break;
      if (orbit.size() > objs.size()) {
        out.obstruction = x0;
        out.detail = "dagger orbit of " + obj_key(c, x0) + " does not close";
        return out;
      }
      orbit.push_back(next);
    }
    for (const auto& y : orbit) seen[obj_key(c, y)] = true;

    std::optional<std::vector<MorOf<C>>> chosen;
    for (const auto& h : preunitary_candidates(c, inv, x0, cap)) {
      std::vector<MorOf<C>> phis{h};
      bool ok = true;
      for (std::size_t i = 0; ok; ++i) {
        auto pinv = checked_inverse(c, phis[i]);
        if (!pinv) { ok = false; break; }
        auto nxt = inv.dag(*pinv);
        const std::size_t j = (i + 1) % orbit.size();
        if (!(c.compose(phis[i], nxt) == inv.iota(orbit[i]))) ok = false;
        if (j == 0) {
          ok = ok && nxt == phis[0];
          break;
        }
        phis.push_back(nxt);
      }
      if (ok) {
        chosen = std::move(phis);
        break;
      }
    }
    if (!chosen) {
      out.obstruction = x0;
      out.detail = "no unitary structure exists: no isomorphism " + obj_key(c, x0) + " -> " +
                   obj_key(c, inv.dag(x0)) + " satisfies the unitary laws";
      return out;
    }
    for (std::size_t i = 0; i < orbit.size(); ++i) out.table.emplace(obj_key(c, orbit[i]), (*chosen)[i]);
  }
  out.found = tabulated_unitary(cp, out.table);
  return out;
}

}  // namespace ipcat
