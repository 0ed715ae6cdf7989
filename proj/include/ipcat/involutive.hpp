#pragma once

#include <functional>
#include <memory>
#include <string>

#include "ipcat/core/category.hpp"
#include "ipcat/core/functor.hpp"

namespace ipcat {

/// A contravariant dagger (-)^† together with the involutor iota_X : X -> X^††.
///
/// Strict dagger categories are the special case dag_obj = id, iota = id; the
/// involutor is always stored explicitly. Contravariance is carried by the
/// endpoints: dag_mor(f : A -> B) : B^† -> A^†.
template <Category C>
struct Involution {
  std::function<ObjOf<C>(const ObjOf<C>&)> dag_obj;
  std::function<MorOf<C>(const MorOf<C>&)> dag_mor;
  std::function<MorOf<C>(const ObjOf<C>&)> iota;

  ObjOf<C> dag(const ObjOf<C>& x) const { return dag_obj(x); }
  MorOf<C> dag(const MorOf<C>& f) const { return dag_mor(f); }
};

/// Wraps the dag_obj/dag_mor/iota members an instance exposes.
template <Category C>
Involution<C> involution_of(std::shared_ptr<const C> c) {
  return {[c](const ObjOf<C>& x) { return c->dag_obj(x); }, [c](const MorOf<C>& f) { return c->dag_mor(f); },
          [c](const ObjOf<C>& x) { return c->iota(x); }};
}

/// Contravariant functoriality of the dagger, naturality and invertibility of
/// the involutor, and iota_{X^†} ; (iota_X)^† = 1.
template <Category C>
LawReport check_involution(const C& c, const Involution<C>& inv, const SampleBudget& b) {
  LawReport report("involution", b);
  HomTable<C> t(c, b);
  const std::size_t n = t.size();
  b.charge(t.composable_pairs(), "dagger composition");

  LawCheck typing("dagger typing"), ids("dagger identity"), comp("dagger composition");
  LawCheck faithful("dagger faithfulness");
  LawCheck iota_typing("involutor typing"), iota_nat("involutor naturality"), iota_inv("involutor invertible");
  LawCheck adjoint_eq("involutor adjoint equivalence");

  for (const auto& x : t.objects()) {
    const auto ctx = [&] { return named_obj(c, "object", x); };
    ids.equal(c, [&] { return std::pair{inv.dag(c.id(x)), c.id(inv.dag(x))}; }, ctx);
    iota_typing.holds([&] { auto i = inv.iota(x); return i.src == x && i.tgt == inv.dag(inv.dag(x)); }, ctx);
    iota_inv.holds([&] { return checked_inverse(c, inv.iota(x)).has_value(); }, ctx, "iota has no two-sided inverse");
    adjoint_eq.equal(c, [&] {
      const auto xd = inv.dag(x);
      return std::pair{c.compose(inv.iota(xd), inv.dag(inv.iota(x))), c.id(xd)};
    }, ctx);
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& hom = t(i, j);
      for (std::size_t p = 0; p < hom.size(); ++p) {
        const auto& f = hom[p];
        const auto ctx = [&] { return named(c, "f", f); };
        typing.holds([&] { auto d = inv.dag(f); return d.src == inv.dag(f.tgt) && d.tgt == inv.dag(f.src); }, ctx);
        iota_nat.equal(c, [&] {
          return std::pair{c.compose(inv.iota(f.src), inv.dag(inv.dag(f))), c.compose(f, inv.iota(f.tgt))};
        }, ctx);
        for (std::size_t q = p + 1; q < hom.size(); ++q) {
          const auto& g = hom[q];
          faithful.holds([&] { return !(inv.dag(f) == inv.dag(g)); }, [&] { return named(c, "f", f, "g", g); },
                         "distinct morphisms with equal daggers");
        }
        for (std::size_t k = 0; k < n; ++k) {
          for (const auto& g : t(j, k)) {
            comp.equal(c, [&] { return std::pair{inv.dag(c.compose(f, g)), c.compose(inv.dag(g), inv.dag(f))}; },
                       [&] { return named(c, "f", f, "g", g); });
          }
        }
      }
    }
  }

  for (auto* chk : {&typing, &ids, &comp, &faithful, &iota_typing, &iota_nat, &iota_inv, &adjoint_eq})
    report.add(std::move(*chk).done());
  return report;
}

/// An achiral involutive functor (F, gamma) with gamma_X : F(X^†) -> F(X)^‡.
template <Category S, Category T>
struct InvolutiveFunctor {
  Functor<S, T> base;
  Involution<S> source_inv;
  Involution<T> target_inv;
  std::function<MorOf<T>(const ObjOf<S>&)> preservator;

  ObjOf<T> operator()(const ObjOf<S>& x) const { return base(x); }
  MorOf<T> operator()(const MorOf<S>& f) const { return base(f); }
  MorOf<T> gamma(const ObjOf<S>& x) const { return preservator(x); }
};

template <Category C>
InvolutiveFunctor<C, C> identity_involutive_functor(std::shared_ptr<const C> c, const Involution<C>& inv) {
  return {identity_functor(c), inv, inv, [c, inv](const ObjOf<C>& x) { return c->id(inv.dag(x)); }};
}

/// X |-> X^††. Its preservator is the identity on X^†††.
template <Category C>
InvolutiveFunctor<C, C> double_dagger_functor(std::shared_ptr<const C> c, const Involution<C>& inv) {
  Functor<C, C> dd{c, c, [inv](const ObjOf<C>& x) { return inv.dag(inv.dag(x)); },
                   [inv](const MorOf<C>& f) { return inv.dag(inv.dag(f)); }};
  return {dd, inv, inv, [c, inv](const ObjOf<C>& x) { return c->id(inv.dag(inv.dag(inv.dag(x)))); }};
}

/// (F, gamma) then (G, gamma'): preservator G(gamma_X) ; gamma'_{F(X)}.
template <Category A, Category B, Category C>
InvolutiveFunctor<A, C> compose_involutive_functors(const InvolutiveFunctor<A, B>& F,
                                                    const InvolutiveFunctor<B, C>& G) {
  auto base = compose_functors(F.base, G.base);
  auto tgt = G.base.target;
  return {base, F.source_inv, G.target_inv,
          [F, G, tgt](const ObjOf<A>& x) { return tgt->compose(G(F.gamma(x)), G.gamma(F(x))); }};
}

/// Functor laws, preservator typing, invertibility and naturality, and the
/// coherence square F(iota_X) ; gamma_{X^†} = iota'_{F X} ; (gamma_X)^‡.
template <Category S, Category T>
LawReport check_involutive_functor(const InvolutiveFunctor<S, T>& F, const SampleBudget& b) {
  const S& s = *F.base.source;
  const T& t = *F.base.target;
  const auto& si = F.source_inv;
  const auto& ti = F.target_inv;

  LawReport report("involutive functor", b);
  for (auto c : check_functor(F.base, b).checks) report.add(std::move(c));

  HomTable<S> h(s, b);
  LawCheck typing("preservator typing"), invertible("preservator invertible");
  LawCheck nat("preservator naturality"), coherence("preservator coherence");
  for (const auto& x : h.objects()) {
    const auto ctx = [&] { return named_obj(s, "object", x); };
    typing.holds([&] { auto g = F.gamma(x); return g.src == F(si.dag(x)) && g.tgt == ti.dag(F(x)); }, ctx);
    invertible.holds([&] { return checked_inverse(t, F.gamma(x)).has_value(); }, ctx, "gamma has no inverse");
    coherence.equal(t, [&] {
      return std::pair{t.compose(F(si.iota(x)), F.gamma(si.dag(x))), t.compose(ti.iota(F(x)), ti.dag(F.gamma(x)))};
    }, ctx);
  }
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      for (const auto& f : h(i, j)) {
        // gamma : F((-)^†) => F(-)^‡ between contravariant functors.
        nat.equal(t, [&] {
          return std::pair{t.compose(F(si.dag(f)), F.gamma(f.src)), t.compose(F.gamma(f.tgt), ti.dag(F(f)))};
        }, [&] { return named(s, "f", f); });
      }
  report.add(std::move(typing).done());
  report.add(std::move(invertible).done());
  report.add(std::move(nat).done());
  report.add(std::move(coherence).done());
  return report;
}

/// A natural transformation alpha : (F, gamma) => (G, gamma') between
/// involutive functors. Its tether is (alpha_{X^†})^‡ : G(X^†)^‡ -> F(X^†)^‡.
template <Category S, Category T>
struct AchiralTransformation {
  InvolutiveFunctor<S, T> from;
  InvolutiveFunctor<S, T> to;
  std::function<MorOf<T>(const ObjOf<S>&)> component;

  MorOf<T> operator()(const ObjOf<S>& x) const { return component(x); }
};

namespace cube_face {
inline constexpr const char* top = "top face (involutor naturality)";
inline constexpr const char* left = "left face (naturality at the involutor)";
inline constexpr const char* back = "back face (source coherence)";
inline constexpr const char* front = "front face (target coherence)";
inline constexpr const char* bottom = "bottom face (tether)";
inline constexpr const char* right = "right face (tether)";
}  // namespace cube_face

template <Category S, Category T>
void require_same_shape(const InvolutiveFunctor<S, T>& F, const InvolutiveFunctor<S, T>& G) {
  if (F.base.source != G.base.source || F.base.target != G.base.target)
    throw ShapeError("transformation between functors with different source or target categories");
}

/// Naturality, the six faces of the transformation cube (each reported by
/// name), and componentwise invertibility. Because the tether faces force
/// every component to be invertible, the report also carries the check
/// "tether lemma": it fails only if all faces pass while some component is
/// not invertible.
template <Category S, Category T>
LawReport check_achiral_transformation(const AchiralTransformation<S, T>& alpha, const SampleBudget& b) {
  require_same_shape(alpha.from, alpha.to);
  const S& s = *alpha.from.base.source;
  const T& t = *alpha.from.base.target;
  const auto& si = alpha.from.source_inv;
  const auto& ti = alpha.from.target_inv;
  const auto& F = alpha.from;
  const auto& G = alpha.to;

  LawReport report("achiral transformation", b);
  HomTable<S> h(s, b);

  LawCheck typing("component typing"), nat("naturality");
  LawCheck top(cube_face::top), left(cube_face::left), back(cube_face::back), front(cube_face::front);
  LawCheck bottom(cube_face::bottom), right(cube_face::right);
  LawCheck invertible("components invertible");
  LawCheck lemma("tether lemma");

  for (const auto& x : h.objects()) {
    const auto ctx = [&] { return named_obj(s, "object", x); };
    typing.holds([&] { auto a = alpha(x); return a.src == F(x) && a.tgt == G(x); }, ctx);
    top.equal(t, [&] {
      return std::pair{t.compose(ti.iota(F(x)), ti.dag(ti.dag(alpha(x)))), t.compose(alpha(x), ti.iota(G(x)))};
    }, ctx);
    left.equal(t, [&] {
      return std::pair{t.compose(F(si.iota(x)), alpha(si.dag(si.dag(x)))), t.compose(alpha(x), G(si.iota(x)))};
    }, ctx);
    back.equal(t, [&] {
      return std::pair{t.compose(F(si.iota(x)), F.gamma(si.dag(x))), t.compose(ti.iota(F(x)), ti.dag(F.gamma(x)))};
    }, ctx);
    front.equal(t, [&] {
      return std::pair{t.compose(G(si.iota(x)), G.gamma(si.dag(x))), t.compose(ti.iota(G(x)), ti.dag(G.gamma(x)))};
    }, ctx);
    bottom.equal(t, [&] {
      const auto xd = si.dag(x);
      const auto tether = ti.dag(alpha(xd));
      return std::pair{t.compose(t.compose(alpha(si.dag(xd)), G.gamma(xd)), tether), F.gamma(xd)};
    }, ctx);
    right.equal(t, [&] {
      const auto tether = ti.dag(alpha(si.dag(x)));
      return std::pair{t.compose(t.compose(ti.dag(ti.dag(alpha(x))), ti.dag(G.gamma(x))), tether), ti.dag(F.gamma(x))};
    }, ctx);
    invertible.holds([&] {
      const auto a = alpha(x);
      const bool inst = checked_inverse(t, a).has_value();
      if (t.hom_is_finite(a.tgt, a.src)) {
        const bool searched = find_inverse_by_search(t, a, b.hard_cap).has_value();
        if (searched != inst) throw TypeError("instance inverse disagrees with explicit inverse search");
      }
      return inst;
    }, ctx, "component is not invertible");
  }
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < h.size(); ++j)
      for (const auto& f : h(i, j))
        nat.equal(t, [&] { return std::pair{t.compose(alpha(f.src), G(f)), t.compose(F(f), alpha(f.tgt))}; },
                  [&] { return named(s, "f", f); });

  const bool cube_ok = !(typing.failed() || nat.failed() || top.failed() || left.failed() || back.failed() ||
                         front.failed() || bottom.failed() || right.failed());
  lemma.holds([&] { return !cube_ok || !invertible.failed(); }, [] { return json::object(); },
              "cube commutes but a component is not invertible");

  for (auto* chk : {&typing, &nat, &top, &left, &back, &front, &bottom, &right, &invertible, &lemma})
    report.add(std::move(*chk).done());
  return report;
}

template <Category S, Category T>
AchiralTransformation<S, T> identity_transformation(const InvolutiveFunctor<S, T>& F) {
  auto tgt = F.base.target;
  return {F, F, [F, tgt](const ObjOf<S>& x) { return tgt->id(F(x)); }};
}

/// The involutor as a transformation Id => (-)^††.
template <Category C>
AchiralTransformation<C, C> involutor_transformation(std::shared_ptr<const C> c, const Involution<C>& inv) {
  return {identity_involutive_functor(c, inv), double_dagger_functor(c, inv),
          [inv](const ObjOf<C>& x) { return inv.iota(x); }};
}

/// Stacking: components alpha_X ; beta_X.
template <Category S, Category T>
AchiralTransformation<S, T> vertical_composite(const AchiralTransformation<S, T>& alpha,
                                               const AchiralTransformation<S, T>& beta) {
  require_same_shape(alpha.to, beta.from);
  auto tgt = alpha.from.base.target;
  return {alpha.from, beta.to, [alpha, beta, tgt](const ObjOf<S>& x) { return tgt->compose(alpha(x), beta(x)); }};
}

/// V then alpha: components alpha_{V(X)}.
template <Category R, Category S, Category T>
AchiralTransformation<R, T> whisker_left(const InvolutiveFunctor<R, S>& V, const AchiralTransformation<S, T>& alpha) {
  if (V.base.target != alpha.from.base.source) throw ShapeError("whisker_left: V does not land in the source of alpha");
  return {compose_involutive_functors(V, alpha.from), compose_involutive_functors(V, alpha.to),
          [V, alpha](const ObjOf<R>& x) { return alpha(V(x)); }};
}

/// alpha then W: components W(alpha_X); the composite preservators W(gamma) ;
/// gamma^W assemble the prism of the right whiskering.
template <Category S, Category T, Category U>
AchiralTransformation<S, U> whisker_right(const AchiralTransformation<S, T>& alpha, const InvolutiveFunctor<T, U>& W) {
  if (alpha.from.base.target != W.base.source) throw ShapeError("whisker_right: alpha does not land in the source of W");
  return {compose_involutive_functors(alpha.from, W), compose_involutive_functors(alpha.to, W),
          [W, alpha](const ObjOf<S>& x) { return W(alpha(x)); }};
}

}  // namespace ipcat
