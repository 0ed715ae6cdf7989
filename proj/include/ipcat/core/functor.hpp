#pragma once

#include <functional>
#include <memory>

#include "ipcat/core/category.hpp"

namespace ipcat {

template <Category S, Category T>
struct Functor {
  std::shared_ptr<const S> source;
  std::shared_ptr<const T> target;
  std::function<ObjOf<T>(const ObjOf<S>&)> on_obj;
  std::function<MorOf<T>(const MorOf<S>&)> on_mor;

  ObjOf<T> operator()(const ObjOf<S>& x) const { return on_obj(x); }
  MorOf<T> operator()(const MorOf<S>& f) const { return on_mor(f); }
};

template <Category C>
Functor<C, C> identity_functor(std::shared_ptr<const C> c) {
  return {c, c, [](const ObjOf<C>& x) { return x; }, [](const MorOf<C>& f) { return f; }};
}

/// Diagrammatic composite: first F, then G.
template <Category A, Category B, Category C>
Functor<A, C> compose_functors(const Functor<A, B>& F, const Functor<B, C>& G) {
  if (F.target != G.source) throw ShapeError("functor composite: target of F is not the source of G");
  return {F.source, G.target, [F, G](const ObjOf<A>& x) { return G(F(x)); },
          [F, G](const MorOf<A>& f) { return G(F(f)); }};
}

/// A natural transformation `from => to`, given by its components.
template <Category S, Category T>
struct NatTrans {
  Functor<S, T> from;
  Functor<S, T> to;
  std::function<MorOf<T>(const ObjOf<S>&)> component;

  MorOf<T> operator()(const ObjOf<S>& x) const { return component(x); }
};

template <Category S, Category T>
LawReport check_functor(const Functor<S, T>& F, const SampleBudget& b) {
  const S& s = *F.source;
  const T& t = *F.target;
  LawReport report("functor", b);
  HomTable<S> h(s, b);
  b.charge(h.composable_pairs(), "functor composition");

  LawCheck typing("functor typing"), ids("functor identity"), comp("functor composition");
  for (const auto& x : h.objects()) {
    ids.equal(t, [&] { return std::pair{F(s.id(x)), t.id(F(x))}; }, [&] { return named_obj(s, "object", x); });
  }
  const std::size_t n = h.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& f : h(i, j)) {
        typing.holds([&] { auto Ff = F(f); return Ff.src == F(f.src) && Ff.tgt == F(f.tgt); },
                     [&] { return named(s, "f", f); });
        for (std::size_t k = 0; k < n; ++k) {
          for (const auto& g : h(j, k)) {
            comp.equal(t, [&] { return std::pair{F(s.compose(f, g)), t.compose(F(f), F(g))}; },
                       [&] { return named(s, "f", f, "g", g); });
          }
        }
      }
    }
  }
  report.add(std::move(typing).done());
  report.add(std::move(ids).done());
  report.add(std::move(comp).done());
  return report;
}

template <Category S, Category T>
LawReport check_natural_transformation(const NatTrans<S, T>& alpha, const SampleBudget& b) {
  const S& s = *alpha.from.source;
  const T& t = *alpha.from.target;
  LawReport report("natural transformation", b);
  HomTable<S> h(s, b);

  LawCheck typing("component typing"), nat("naturality");
  for (const auto& x : h.objects()) {
    typing.holds([&] { auto a = alpha(x); return a.src == alpha.from(x) && a.tgt == alpha.to(x); },
                 [&] { return named_obj(s, "object", x); });
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < h.size(); ++j) {
      for (const auto& f : h(i, j)) {
        nat.equal(t, [&] { return std::pair{t.compose(alpha(f.src), alpha.to(f)), t.compose(alpha.from(f), alpha(f.tgt))}; },
                  [&] { return named(s, "f", f); });
      }
    }
  }
  report.add(std::move(typing).done());
  report.add(std::move(nat).done());
  return report;
}

}  // namespace ipcat
