#pragma once

#include <functional>
#include <memory>
#include <tuple>
#include <vector>

#include "ipcat/unitary.hpp"

namespace ipcat {

/// <f|g> : A -> B^† for f : A -> X, g : B -> X.
template <Category C>
struct InnerProduct {
  std::function<MorOf<C>(const MorOf<C>&, const MorOf<C>&)> combinator;

  MorOf<C> operator()(const MorOf<C>& f, const MorOf<C>& g) const {
    if (f.tgt != g.tgt) throw TypeError("inner product of maps with different codomains");
    return combinator(f, g);
  }
};

/// The dual <h|k>^iota : A^† -> B for h : X -> A, k : X -> B, defined as
/// iota_{A^†} ; <k^†|h^†>^† ; iota_B^-1.
template <Category C>
MorOf<C> dual_ip(const C& c, const Involution<C>& inv, const InnerProduct<C>& ip, const MorOf<C>& h,
                 const MorOf<C>& k) {
  if (h.src != k.src) throw TypeError("dual inner product of maps with different domains");
  const auto a_dag = inv.dag(h.tgt);
  return c.compose(c.compose(inv.iota(a_dag), inv.dag(ip(inv.dag(k), inv.dag(h)))), inverse_of(c, inv.iota(k.tgt)));
}

/// Wraps a combinator, checking on every budgeted parallel pair that
/// <f|g> : src f -> (src g)^†.
template <Category C>
InnerProduct<C> attach_inner_product(const C& c, const Involution<C>& inv,
                                     std::function<MorOf<C>(const MorOf<C>&, const MorOf<C>&)> combinator,
                                     const SampleBudget& b) {
  InnerProduct<C> ip{std::move(combinator)};
  HomTable<C> t(c, b);
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t a = 0; a < t.size(); ++a)
      for (const auto& f : t(a, x))
        for (std::size_t bb = 0; bb < t.size(); ++bb)
          for (const auto& g : t(bb, x)) {
            const auto r = ip(f, g);
            if (r.src != f.src || r.tgt != inv.dag(g.src))
              throw TypeError("inner product is ill-typed on " + named(c, "f", f, "g", g).dump());
          }
  return ip;
}

/// <f|g> := f ; phi_X ; g^†.
template <Category C>
InnerProduct<C> ip_from_unitary(std::shared_ptr<const C> c, const Involution<C>& inv, const UnitaryStructure<C>& u) {
  return {[c, inv, u](const MorOf<C>& f, const MorOf<C>& g) {
    return c->compose(c->compose(f, u(f.tgt)), inv.dag(g));
  }};
}

/// phi_A := <1_A|1_A>.
template <Category C>
UnitaryStructure<C> unitary_from_ip(std::shared_ptr<const C> c, const InnerProduct<C>& ip) {
  return {[c, ip](const ObjOf<C>& a) { return ip(c->id(a), c->id(a)); }};
}

namespace detail {

template <Category C>
struct SplitPair {
  MorOf<C> section;     // s : X -> B
  MorOf<C> retraction;  // r : B -> X, s ; r = 1_X
};

/// Budgeted pairs (s, r) with s ; r = 1.
template <Category C>
std::vector<SplitPair<C>> split_pairs(const C& c, const HomTable<C>& t) {
  std::vector<SplitPair<C>> out;
  for (std::size_t x = 0; x < t.size(); ++x)
    for (std::size_t bb = 0; bb < t.size(); ++bb)
      for (const auto& s : t(x, bb))
        for (const auto& r : t(bb, x))
          if (c.compose(s, r) == c.id(t.objects()[x])) out.push_back({s, r});
  return out;
}

}  // namespace detail

namespace law {
inline constexpr const char* ip_precomposition = "precomposition";
inline constexpr const char* ip_dual_form = "dual form";
inline constexpr const char* ip_symmetry = "conjugate symmetry";
inline constexpr const char* ip_double_dagger = "double dagger";
inline constexpr const char* ip_section = "section cancellation";
inline constexpr const char* ip_retraction = "retraction cancellation";
}  // namespace law

/// The four inner product axioms. The cancellation axioms range only over
/// budgeted section/retraction pairs.
template <Category C>
LawReport check_ip_axioms(const C& c, const Involution<C>& inv, const InnerProduct<C>& ip, const SampleBudget& b) {
  LawReport report("inner product", b);
  HomTable<C> t(c, b);
  const std::size_t n = t.size();
  const auto dip = [&](const MorOf<C>& h, const MorOf<C>& k) { return dual_ip(c, inv, ip, h, k); };

  // into[x] lists every pair (h, f) with h ; f landing in x.
  std::uint64_t pre_tuples = 0;
  std::vector<std::uint64_t> into(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t a2 = 0; a2 < n; ++a2) into[x] += t(a2, a).size() * t(a, x).size();
    pre_tuples += into[x] * into[x];
  }
  TupleSampler pick(b, pre_tuples, law::ip_precomposition);

  LawCheck pre(law::ip_precomposition);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& f : t(a, x))
        for (std::size_t bb = 0; bb < n; ++bb)
          for (const auto& g : t(bb, x)) {
            const auto fg = [&] { return ip(f, g); };
            for (std::size_t a2 = 0; a2 < n; ++a2)
              for (const auto& h : t(a2, a))
                for (std::size_t b2 = 0; b2 < n; ++b2)
                  for (const auto& k : t(b2, bb)) {
                    if (!pick.take()) continue;
                    pre.equal(c, [&] {
                      return std::pair{ip(c.compose(h, f), c.compose(k, g)), c.compose(c.compose(h, fg()), inv.dag(k))};
                    }, [&] { return named(c, "f", f, "g", g, "h", h, "k", k); });
                  }
          }

  LawCheck dual(law::ip_dual_form), sym(law::ip_symmetry), dd(law::ip_double_dagger);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& f : t(a, x))
        for (std::size_t bb = 0; bb < n; ++bb)
          for (const auto& g : t(bb, x)) {
            const auto ctx = [&] { return named(c, "f", f, "g", g); };
            dual.equal(c, [&] { return std::pair{c.compose(inv.iota(f.src), dip(inv.dag(f), inv.dag(g))), ip(f, g)}; }, ctx);
            sym.equal(c, [&] { return std::pair{c.compose(inv.iota(g.src), inv.dag(ip(f, g))), ip(g, f)}; }, ctx);
            dd.equal(c, [&] {
              const auto rhs = c.compose(c.compose(inverse_of(c, inv.iota(f.src)), ip(f, g)), inv.iota(inv.dag(g.src)));
              return std::pair{ip(inv.dag(inv.dag(f)), inv.dag(inv.dag(g))), rhs};
            }, ctx);
          }

  // Section cancellation: s ; r = 1_X, f : A -> X, k : X -> D gives
  // <f|r> ; <s|k>^iota = f ; k.
  // Retraction cancellation: s ; r = 1_A, f : A -> Z, k : Y -> A gives
  // <f|s>^iota ; <r|k> = (k ; f)^†.
  LawCheck sec(law::ip_section), ret(law::ip_retraction);
  const auto splits = detail::split_pairs(c, t);
  for (const auto& [s, r] : splits) {
    const auto xi = *t.index_of(s.src);
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& f : t(a, xi))
        for (std::size_t d = 0; d < n; ++d)
          for (const auto& k : t(xi, d))
            sec.equal(c, [&] { return std::pair{c.compose(ip(f, r), dip(s, k)), c.compose(f, k)}; },
                      [&] { return named(c, "section", s, "retraction", r, "f", f, "k", k); });
    for (std::size_t z = 0; z < n; ++z)
      for (const auto& f : t(xi, z))
        for (std::size_t y = 0; y < n; ++y)
          for (const auto& k : t(y, xi))
            ret.equal(c, [&] { return std::pair{c.compose(dip(f, s), ip(r, k)), inv.dag(c.compose(k, f))}; },
                      [&] { return named(c, "section", s, "retraction", r, "f", f, "k", k); });
  }
  if (splits.empty()) {
    sec.note("no split pairs in budget");
    ret.note("no split pairs in budget");
  }

  report.add(std::move(pre).done());
  report.add(std::move(dual).done());
  report.add(std::move(sym).done());
  report.add(std::move(dd).done());
  report.add(std::move(sec).done());
  report.add(std::move(ret).done());
  return report;
}

/// Reports the dual form, conjugate symmetry and double dagger laws one by
/// one, then whether "(dual form or symmetry) and double dagger" and "dual
/// form and symmetry" agree over the budget.
template <Category C>
LawReport check_ip2_equivalence(const C& c, const Involution<C>& inv, const InnerProduct<C>& ip,
                                const SampleBudget& b) {
  LawReport report("dagger laws", b);
  HomTable<C> t(c, b);
  const std::size_t n = t.size();
  LawCheck a(law::ip_dual_form), s(law::ip_symmetry), d(law::ip_double_dagger);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& f : t(i, x))
        for (std::size_t j = 0; j < n; ++j)
          for (const auto& g : t(j, x)) {
            const auto ctx = [&] { return named(c, "f", f, "g", g); };
            a.equal(c, [&] {
              return std::pair{c.compose(inv.iota(f.src), dual_ip(c, inv, ip, inv.dag(f), inv.dag(g))), ip(f, g)};
            }, ctx);
            s.equal(c, [&] { return std::pair{c.compose(inv.iota(g.src), inv.dag(ip(f, g))), ip(g, f)}; }, ctx);
            d.equal(c, [&] {
              const auto rhs = c.compose(c.compose(inverse_of(c, inv.iota(f.src)), ip(f, g)), inv.iota(inv.dag(g.src)));
              return std::pair{ip(inv.dag(inv.dag(f)), inv.dag(inv.dag(g))), rhs};
            }, ctx);
          }
  const bool A = !a.failed(), B = !s.failed(), D = !d.failed();
  LawCheck eq("equivalence");
  eq.holds([&] { return ((A || B) && D) == (A && B); },
           [&] { return json{{"dual form", A}, {"conjugate symmetry", B}, {"double dagger", D}}; },
           "one side of the equivalence holds and the other does not");
  report.add(std::move(a).done());
  report.add(std::move(s).done());
  report.add(std::move(d).done());
  report.add(std::move(eq).done());
  return report;
}

template <Category C>
LawReport check_inner_identities(const C& c, const Involution<C>& inv, const InnerProduct<C>& ip,
                                 const SampleBudget& b) {
  LawReport report("inner identities", b);
  HomTable<C> t(c, b);
  const std::size_t n = t.size();
  const auto dip = [&](const MorOf<C>& h, const MorOf<C>& k) { return dual_ip(c, inv, ip, h, k); };

  // h, k : B -> A and f, g : A -> X give <h;f|k;g>^iota = f^† ; <h|k>^iota ; g.
  LawCheck one("dual precomposition");
  std::uint64_t total = 0;
  for (std::size_t bi = 0; bi < n; ++bi)
    for (std::size_t ai = 0; ai < n; ++ai)
      for (std::size_t xi = 0; xi < n; ++xi)
        total += t(bi, ai).size() * t(bi, ai).size() * t(ai, xi).size() * t(ai, xi).size();
  TupleSampler pick(b, total, "dual precomposition");
  for (std::size_t bi = 0; bi < n; ++bi)
    for (std::size_t ai = 0; ai < n; ++ai)
      for (const auto& h : t(bi, ai))
        for (const auto& k : t(bi, ai))
          for (std::size_t xi = 0; xi < n; ++xi)
            for (const auto& f : t(ai, xi))
              for (const auto& g : t(ai, xi))
                if (pick.take())
                  one.equal(c, [&] {
                  return std::pair{dip(c.compose(h, f), c.compose(k, g)), c.compose(c.compose(inv.dag(f), dip(h, k)), g)};
                }, [&] { return named(c, "f", f, "g", g, "h", h, "k", k); });

  // <g^†|f^†> = (<f|g>^iota)^† for f, g with a common domain, and
  // <f|g>^† = <g^†|f^†>^iota for f, g with a common codomain.
  LawCheck two("dagger of dual"), three("dagger of inner product");
  for (std::size_t ai = 0; ai < n; ++ai)
    for (std::size_t zi = 0; zi < n; ++zi)
      for (const auto& f : t(ai, zi))
        for (std::size_t wi = 0; wi < n; ++wi)
          for (const auto& g : t(ai, wi)) {
            two.equal(c, [&] { return std::pair{ip(inv.dag(g), inv.dag(f)), inv.dag(dip(f, g))}; },
                      [&] { return named(c, "f", f, "g", g); });
          }
  for (std::size_t xi = 0; xi < n; ++xi)
    for (std::size_t ai = 0; ai < n; ++ai)
      for (const auto& f : t(ai, xi))
        for (std::size_t bi = 0; bi < n; ++bi)
          for (const auto& g : t(bi, xi))
            three.equal(c, [&] { return std::pair{inv.dag(ip(f, g)), dip(inv.dag(g), inv.dag(f))}; },
                        [&] { return named(c, "f", f, "g", g); });

  report.add(std::move(one).done());
  report.add(std::move(two).done());
  report.add(std::move(three).done());
  return report;
}

/// <F f|F g> = F(<f|g>) ; gamma_B, cross-checked against the unitary functor
/// condition on the derived unitary structures.
template <Category S, Category T>
LawReport check_ip_preserving_functor(const InvolutiveFunctor<S, T>& F, const InnerProduct<S>& ips,
                                      const InnerProduct<T>& ipt, const SampleBudget& b) {
  const S& s = *F.base.source;
  const T& t = *F.base.target;
  LawReport report("inner product functor", b);
  HomTable<S> h(s, b);
  const std::size_t n = h.size();
  LawCheck pres("preserves inner product");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& f : h(a, x))
        for (std::size_t bb = 0; bb < n; ++bb)
          for (const auto& g : h(bb, x))
            pres.equal(t, [&] { return std::pair{ipt(F(f), F(g)), t.compose(F(ips(f, g)), F.gamma(g.src))}; },
                       [&] { return named(s, "f", f, "g", g); });

  const auto unit = check_unitary_functor(F, unitary_from_ip(F.base.source, ips), unitary_from_ip(F.base.target, ipt), b);
  LawCheck agree("agrees with unitary functor condition");
  agree.holds([&] { return unit.passed() == !pres.failed(); },
              [&] { return json{{"preserves", !pres.failed()}, {"unitary", unit.passed()}}; },
              "inner product preservation and the unitary functor condition disagree");
  report.add(std::move(pres).done());
  report.add(std::move(agree).done());
  return report;
}

/// Both round trips between unitary structures and inner products, and the
/// closed form <h|k>^iota = h^† ; phi_X^-1 ; k of the derived dual.
template <Category C>
LawReport check_ip_unitary_round_trip(std::shared_ptr<const C> cp, const Involution<C>& inv,
                                      const UnitaryStructure<C>& u, const SampleBudget& b) {
  const C& c = *cp;
  LawReport report("round trip", b);
  const auto ip = ip_from_unitary(cp, inv, u);
  const auto u2 = unitary_from_ip(cp, ip);
  const auto ip2 = ip_from_unitary(cp, inv, u2);
  HomTable<C> t(c, b);
  const std::size_t n = t.size();

  LawCheck phi_rt("phi round trip"), ip_rt("inner product round trip"), closed("dual closed form");
  for (const auto& x : t.objects())
    phi_rt.equal(c, [&] { return std::pair{u2(x), u(x)}; }, [&] { return named_obj(c, "object", x); });
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& f : t(a, x))
        for (std::size_t bb = 0; bb < n; ++bb)
          for (const auto& g : t(bb, x))
            ip_rt.equal(c, [&] { return std::pair{ip2(f, g), ip(f, g)}; }, [&] { return named(c, "f", f, "g", g); });
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& h : t(x, a))
        for (std::size_t bb = 0; bb < n; ++bb)
          for (const auto& k : t(x, bb))
            closed.equal(c, [&] {
              return std::pair{dual_ip(c, inv, ip, h, k), c.compose(c.compose(inv.dag(h), phi_inverse(c, u, h.src)), k)};
            }, [&] { return named(c, "h", h, "k", k); });
  report.add(std::move(phi_rt).done());
  report.add(std::move(ip_rt).done());
  report.add(std::move(closed).done());
  return report;
}

}  // namespace ipcat
