#pragma once

#include <memory>
#include <vector>

#include "ipcat/innerprod.hpp"

namespace ipcat {

/// f* := phi_B ; f^† ; phi_A^-1 for f : A -> B.
template <Category C>
MorOf<C> adjoint(const C& c, const Involution<C>& inv, const UnitaryStructure<C>& u, const MorOf<C>& f) {
  return c.compose(c.compose(u(f.tgt), inv.dag(f)), phi_inverse(c, u, f.src));
}

template <Category C>
LawReport check_adjoint_laws(std::shared_ptr<const C> cp, const Involution<C>& inv, const UnitaryStructure<C>& u,
                             const SampleBudget& b) {
  const C& c = *cp;
  const auto star = [&](const MorOf<C>& f) { return adjoint(c, inv, u, f); };
  const auto ip = ip_from_unitary(cp, inv, u);
  LawReport report("adjoint", b);
  HomTable<C> t(c, b);
  const std::size_t n = t.size();

  LawCheck typing("adjoint typing"), invol("adjoint involutive"), unit("adjoint of identity");
  LawCheck contra("adjoint reverses composition"), round("adjoint round trip");
  LawCheck left("adjunction"), right("adjunction of adjoint"), unique("adjoint uniqueness");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
          total += t(i, j).size() * (t(w, i).size() * t(v, j).size() + t(w, j).size() * t(v, i).size());
  TupleSampler pick(b, total, "adjunction");

  for (const auto& a : t.objects()) unit.equal(c, [&] { return std::pair{star(c.id(a)), c.id(a)}; },
                                               [&] { return named_obj(c, "object", a); });

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& f : t(i, j)) {
        const auto ctx = [&] { return named(c, "f", f); };
        typing.holds([&] { auto s = star(f); return s.src == f.tgt && s.tgt == f.src; }, ctx);
        invol.equal(c, [&] { return std::pair{star(star(f)), f}; }, ctx);
        round.equal(c, [&] {
          return std::pair{f, c.compose(c.compose(u(f.src), inv.dag(star(f))), phi_inverse(c, u, f.tgt))};
        }, ctx);
        for (std::size_t k = 0; k < n; ++k)
          for (const auto& g : t(j, k))
            contra.equal(c, [&] { return std::pair{star(c.compose(f, g)), c.compose(star(g), star(f))}; },
                         [&] { return named(c, "f", f, "g", g); });
        // <x;f|y> = <x|y;f*> for x : W -> A, y : V -> B, and the mirror
        // <x;f*|y> = <x|y;f> for x : W -> B, y : V -> A.
        for (std::size_t w = 0; w < n; ++w)
          for (std::size_t v = 0; v < n; ++v) {
            for (const auto& x : t(w, i))
              for (const auto& y : t(v, j))
                if (pick.take())
                  left.equal(c, [&] { return std::pair{ip(c.compose(x, f), y), ip(x, c.compose(y, star(f)))}; },
                           [&] { return named(c, "f", f, "x", x, "y", y); });
            for (const auto& x : t(w, j))
              for (const auto& y : t(v, i))
                if (pick.take())
                  right.equal(c, [&] { return std::pair{ip(c.compose(x, star(f)), y), ip(x, c.compose(y, f))}; },
                            [&] { return named(c, "f", f, "x", x, "y", y); });
          }
      }

  // Every g : B -> A satisfying the adjunction against all budgeted x, y must
  // be f*. Only searched where hom(B, A) is finite.
  bool searched = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = t.objects()[i];
      const auto& bo = t.objects()[j];
      if (!c.hom_is_finite(bo, a)) continue;
      searched = true;
      const auto cands = candidates(c, bo, a, b.hard_cap);
      for (const auto& f : t(i, j)) {
        std::size_t solutions = 0;
        bool star_solves = false;
        for (const auto& g : cands) {
          bool ok = true;
          for (std::size_t w = 0; w < n && ok; ++w)
            for (std::size_t v = 0; v < n && ok; ++v)
              for (const auto& x : t(w, i)) {
                for (const auto& y : t(v, j))
                  if (!(ip(c.compose(x, f), y) == ip(x, c.compose(y, g)))) { ok = false; break; }
                if (!ok) break;
              }
          if (ok) {
            ++solutions;
            star_solves = star_solves || g == star(f);
          }
        }
        unique.holds([&] { return solutions == 1 && star_solves; },
                     [&] { return json{{"f", mor_json(c, f)}, {"solutions", solutions}}; },
                     "adjunction does not have exactly one solution, the adjoint");
      }
    }
  if (!searched) unique.mark_unknown("no finite hom-set to search");

  for (auto* chk : {&typing, &invol, &unit, &contra, &round, &left, &right, &unique})
    report.add(std::move(*chk).done());
  return report;
}

/// The category with dagger f |-> f*, trivial involutor and phi, and the
/// identity-on-data functor V = (Id, phi^-1) into it.
template <Category C>
struct Strictified {
  std::shared_ptr<const C> category;
  Involution<C> source_inv;
  UnitaryStructure<C> source_unit;
  Involution<C> inv;
  UnitaryStructure<C> unit;
  InnerProduct<C> ip;
  InvolutiveFunctor<C, C> V;
};

template <Category C>
Involution<C> adjoint_involution(std::shared_ptr<const C> c, const Involution<C>& inv, const UnitaryStructure<C>& u) {
  return {[](const ObjOf<C>& x) { return x; }, [c, inv, u](const MorOf<C>& f) { return adjoint(*c, inv, u, f); },
          [c](const ObjOf<C>& x) { return c->id(x); }};
}

template <Category C>
UnitaryStructure<C> identity_unitary(std::shared_ptr<const C> c) {
  return {[c](const ObjOf<C>& x) { return c->id(x); }};
}

template <Category C>
Strictified<C> strictify(std::shared_ptr<const C> c, const Involution<C>& inv, const UnitaryStructure<C>& u) {
  auto sinv = adjoint_involution(c, inv, u);
  auto unit = identity_unitary(c);
  InnerProduct<C> ip{[c, sinv](const MorOf<C>& f, const MorOf<C>& g) { return c->compose(f, sinv.dag(g)); }};
  InvolutiveFunctor<C, C> V{identity_functor(c), inv, sinv,
                            [c, u](const ObjOf<C>& x) { return phi_inverse(*c, u, x); }};
  return {c, inv, u, sinv, unit, ip, V};
}

/// (F, gamma) |-> (F, id) between strictified categories.
template <Category S, Category T>
InvolutiveFunctor<S, T> strictify_functor(const InvolutiveFunctor<S, T>& F, const Strictified<S>& s,
                                          const Strictified<T>& t) {
  auto tgt = F.base.target;
  return {F.base, s.inv, t.inv, [F, tgt](const ObjOf<S>& x) { return tgt->id(F(x)); }};
}

/// Inverse of strictify_functor: the base with its forced preservator.
template <Category S, Category T>
InvolutiveFunctor<S, T> unstrictify_functor(const InvolutiveFunctor<S, T>& F, const Strictified<S>& s,
                                            const Strictified<T>& t) {
  return unitary_functor(F.base, s.source_inv, t.source_inv, s.source_unit, t.source_unit);
}

/// Componentwise conjugation of a transformation by V; since V is the
/// identity on data, the components are unchanged.
template <Category S, Category T>
AchiralTransformation<S, T> strictify_transformation(const AchiralTransformation<S, T>& alpha, const Strictified<S>& s,
                                                     const Strictified<T>& t) {
  return {strictify_functor(alpha.from, s, t), strictify_functor(alpha.to, s, t), alpha.component};
}

/// The strict involution, V as an involutive, unitary and inner product
/// preserving functor, and the identities linking phi with the adjoint.
template <Category C>
LawReport check_strictification(const Strictified<C>& st, const SampleBudget& b) {
  const C& c = *st.category;
  const auto& inv = st.source_inv;
  const auto& u = st.source_unit;
  LawReport report("strictification", b);
  report.absorb(check_involution(c, st.inv, b));
  report.absorb(check_unitary(c, st.inv, st.unit, b));
  report.absorb(check_involutive_functor(st.V, b));
  report.absorb(check_unitary_functor(st.V, u, st.unit, b));
  report.absorb(check_ip_preserving_functor(st.V, ip_from_unitary(st.category, inv, u), st.ip, b));

  HomTable<C> t(c, b);
  const std::size_t n = t.size();
  LawCheck strict("strict on objects"), data("identity on data"), coh("coherence of V");
  LawCheck nat("preservator naturality"), ipf("inner product through phi");
  for (const auto& x : t.objects()) {
    const auto ctx = [&] { return named_obj(c, "object", x); };
    strict.holds([&] { return st.inv.dag(x) == x && st.inv.iota(x) == c.id(x); }, ctx);
    data.holds([&] { return st.V(x) == x; }, ctx);
    coh.equal(c, [&] {
      return std::pair{c.compose(inv.iota(x), phi_inverse(c, u, inv.dag(x))), st.inv.dag(phi_inverse(c, u, x))};
    }, ctx);
  }
  const auto ip = ip_from_unitary(st.category, inv, u);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& f : t(i, j)) {
        data.holds([&] { return st.V(f) == f; }, [&] { return named(c, "f", f); });
        nat.equal(c, [&] {
          return std::pair{c.compose(phi_inverse(c, u, f.tgt), st.inv.dag(f)), c.compose(inv.dag(f), phi_inverse(c, u, f.src))};
        }, [&] { return named(c, "f", f); });
        for (std::size_t k = 0; k < n; ++k)
          for (const auto& g : t(k, j))
            ipf.equal(c, [&] {
              return std::pair{c.compose(ip(f, g), phi_inverse(c, u, g.src)), c.compose(f, st.inv.dag(g))};
            }, [&] { return named(c, "f", f, "g", g); });
      }
  report.add(std::move(strict).done());
  report.add(std::move(data).done());
  report.add(std::move(coh).done());
  report.add(std::move(nat).done());
  report.add(std::move(ipf).done());
  return report;
}

}  // namespace ipcat
