#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support/support.hpp"

using namespace ipcat;

TEST(Adjoint, FinRelAdjointIsTranspose) {
  const auto b = finrel_bundle(2);
  for (int x : b.cat->objects())
    for (int y : b.cat->objects())
      for (const auto& f : candidates(*b.cat, x, y)) {
        const auto s = adjoint(*b.cat, b.inv, *b.unit, f);
        EXPECT_EQ(support::to_bool(s), support::bool_transpose(support::to_bool(f), x, y));
      }
}

TEST(Adjoint, GroupoidAdjointIsInverse) {
  for (const auto* g : {"s3", "s3-twisted", "z4"}) {
    const auto b = groupoid_bundle(g);
    for (int x = 0; x < b.cat->order(); ++x)
      EXPECT_EQ(adjoint(*b.cat, b.inv, *b.unit, b.cat->element(x)).payload, b.cat->inv(x)) << g << " " << x;
  }
}

TEST(Adjoint, S3ReversesProducts) {
  const auto b = groupoid_bundle("s3");
  const auto star = [&](int x) { return adjoint(*b.cat, b.inv, *b.unit, b.cat->element(x)).payload; };
  int pairs = 0;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y, ++pairs)
      EXPECT_EQ(star(b.cat->mul(x, y)), b.cat->mul(star(y), star(x)));
  EXPECT_EQ(pairs, 36);
}

// f = [[z]] : (1,L) -> (1,R) with weight w has adjoint conj(z) / w^2.
TEST(Adjoint, TwistedScalarAgainstClosedForm) {
  const auto tw = twistedmat_bundle(1, TwistedMat::default_samples(), {mpq_class(2)});
  const auto& c = *tw.cat;
  const TwObj L{1, Side::L}, R{1, Side::R};
  const auto scalar = [](const TwObj& a, const TwObj& b, GaussQ z) {
    return TwistedMat::Mor{a, b, Matrix<GaussQ>::scalar(1, z)};
  };
  const auto f = scalar(L, R, GaussQ::i());
  const auto s = adjoint(c, tw.inv, *tw.unit, f);
  EXPECT_EQ(s, scalar(R, L, GaussQ(0, mpq_class(-1, 4))));

  // Brute force: the only g : R -> L among a grid of Gaussian rationals with
  // <x;f|y> = <x|y;g> for all test vectors x, y.
  const auto ip = ip_from_unitary(tw.cat, tw.inv, *tw.unit);
  std::vector<GaussQ> grid;
  for (int p : {-4, -2, -1, 0, 1, 2, 4})
    for (int q : {-4, -2, -1, 0, 1, 2, 4}) grid.emplace_back(mpq_class(p, 4), mpq_class(q, 4));
  const std::vector<GaussQ> probes{GaussQ(1), GaussQ::i(), GaussQ(2, 1)};
  std::vector<GaussQ> solutions;
  for (const auto& z : grid) {
    const auto g = scalar(R, L, z);
    bool ok = true;
    for (const auto& w : {L, R})
      for (const auto& v : {L, R})
        for (const auto& px : probes)
          for (const auto& py : probes) {
            const auto x = scalar(w, L, px);
            const auto y = scalar(v, R, py);
            ok = ok && ip(c.compose(x, f), y) == ip(x, c.compose(y, g));
          }
    if (ok) solutions.push_back(z);
  }
  ASSERT_EQ(solutions.size(), 1u);
  EXPECT_EQ(solutions[0], GaussQ(0, mpq_class(-1, 4)));
}

TEST(Adjoint, LawsOnInstances) {
  const auto fr = finrel_bundle(2);
  const auto r = check_adjoint_laws(fr.cat, fr.inv, *fr.unit, SampleBudget::exhaustive());
  EXPECT_TRUE(r.passed()) << to_json(r).dump(2);
  EXPECT_TRUE(r.find("adjoint uniqueness")->passed());
  const auto s3 = groupoid_bundle("s3-twisted");
  EXPECT_TRUE(check_adjoint_laws(s3.cat, s3.inv, *s3.unit, SampleBudget::exhaustive()).passed());
  const auto tw = twistedmat_bundle(2);
  const auto rt = check_adjoint_laws(tw.cat, tw.inv, *tw.unit, default_budget(*tw.cat, 3));
  EXPECT_TRUE(rt.passed()) << to_json(rt).dump(2);
}

// Boolean-matrix oracle on object 2: the only S with x;R;y^T = x;S^T;y^T
// for all x, y is R^T.
TEST(Adjoint, FinRelUniquenessOracle) {
  using support::bool_compose;
  using support::bool_transpose;
  const FinRel c(2);
  for (const auto& R : candidates(c, 2, 2)) {
    const auto r = support::to_bool(R);
    std::vector<support::BoolMat> sols;
    for (const auto& S : candidates(c, 2, 2)) {
      const auto st = bool_transpose(support::to_bool(S), 2, 2);
      bool ok = true;
      for (int w = 0; w <= 2; ++w)
        for (int v = 0; v <= 2; ++v)
          for (const auto& X : candidates(c, w, 2))
            for (const auto& Y : candidates(c, v, 2)) {
              const auto x = support::to_bool(X);
              const auto yt = bool_transpose(support::to_bool(Y), v, 2);
              ok = ok && bool_compose(bool_compose(x, r, w, 2, 2), yt, w, 2, v) ==
                             bool_compose(bool_compose(x, st, w, 2, 2), yt, w, 2, v);
            }
      if (ok) sols.push_back(support::to_bool(S));
    }
    ASSERT_EQ(sols.size(), 1u);
    EXPECT_EQ(sols[0], bool_transpose(r, 2, 2));
  }
}

TEST(Strictification, StrictInputKeepsDagger) {
  const auto fr = finrel_bundle(2);
  const auto st = strictify(fr.cat, fr.inv, *fr.unit);
  for (int x : fr.cat->objects())
    for (int y : fr.cat->objects())
      for (const auto& f : candidates(*fr.cat, x, y)) EXPECT_EQ(st.inv.dag(f), fr.inv.dag(f));
  EXPECT_TRUE(check_strictification(st, SampleBudget::exhaustive()).passed());
}

TEST(Strictification, TwistedMat) {
  const auto tw = twistedmat_bundle(2, TwistedMat::default_samples(), {mpq_class(1), mpq_class(3)});
  const auto st = strictify(tw.cat, tw.inv, *tw.unit);
  const auto budget = default_budget(*tw.cat, 4);
  EXPECT_TRUE(check_involution(*tw.cat, st.inv, budget).passed());
  for (const auto& x : tw.cat->objects()) {
    EXPECT_EQ(st.inv.dag(x), x);
    EXPECT_EQ(st.inv.iota(x), tw.cat->id(x));
  }
  const auto r = check_strictification(st, budget);
  EXPECT_TRUE(r.passed()) << to_json(r).dump(2);
  EXPECT_TRUE(r.find("preservator naturality")->passed());
  EXPECT_TRUE(r.find("coherence of V")->passed());
}

TEST(Strictification, FunctorsAcrossStrictifications) {
  const auto tw = twistedmat_bundle(2);
  const auto st = strictify(tw.cat, tw.inv, *tw.unit);
  const auto F = unitary_functor(identity_functor(tw.cat), tw.inv, tw.inv, *tw.unit, *tw.unit);
  const auto budget = default_budget(*tw.cat, 3);
  EXPECT_TRUE(check_involutive_functor(strictify_functor(F, st, st), budget).passed());
  EXPECT_TRUE(check_involutive_functor(unstrictify_functor(strictify_functor(F, st, st), st, st), budget).passed());
}

TEST(PreUnitary, SRGraphKeepsOnlySelfComplementary) {
  const auto b = srgraph_bundle(3);
  const auto ps = enumerate_preunitary(*b.cat, b.inv, SampleBudget::exhaustive());
  std::set<int> ns;
  for (const auto& p : ps) ns.insert(static_cast<int>(p.base.n));
  EXPECT_EQ(ps.size(), 2u);
  EXPECT_EQ(ns, (std::set<int>{0, 1}));
}

TEST(PreUnitary, ReversedOrderOnlyZero) {
  const auto b = finordrev_bundle(2);
  const auto ps = enumerate_preunitary(*b.cat, b.inv, SampleBudget::exhaustive());
  ASSERT_EQ(ps.size(), 1u);
  EXPECT_EQ(ps[0].base, 0);
}

TEST(PreUnitary, IntegerScalars) {
  const auto b = matrig_bundle<mpz_class>(2);
  std::set<long> got;
  for (const auto& h : preunitary_candidates(*b.cat, b.inv, std::size_t{1})) got.insert(h.payload.at(0, 0).get_si());
  EXPECT_EQ(got, (std::set<long>{-1, 1}));
}

template <Category C>
void expect_preunitary_is_hermitian_iso(const Bundle<C>& b) {
  const auto budget = SampleBudget::exhaustive();
  Classifier<C> k(b.cat, b.inv, *b.unit, budget);
  for (const auto& x : b.cat->objects()) {
    const auto pre = preunitary_candidates(*b.cat, b.inv, x);
    std::size_t herm_iso = 0;
    for (const auto& h : candidates(*b.cat, x, x)) {
      const bool hi = k.hermitian(h).value == Flag::yes && b.cat->inverse(h).has_value();
      herm_iso += hi;
      EXPECT_EQ(hi, std::find(pre.begin(), pre.end(), h) != pre.end()) << mor_json(*b.cat, h).dump();
    }
    EXPECT_EQ(herm_iso, pre.size());
  }
}

TEST(PreUnitary, StrictMeansHermitianIso) {
  expect_preunitary_is_hermitian_iso(finrel_bundle(2));
  expect_preunitary_is_hermitian_iso(groupoid_bundle("s3"));
}

TEST(UnitaryOf, FinRelPassesAllSuites) {
  const auto b = finrel_bundle(2);
  const auto budget = SampleBudget::exhaustive();
  const auto u = build_unitary_of(b.cat, b.inv, budget);
  // Objects (X, h) with h a symmetric invertible relation on X.
  EXPECT_EQ(u->objects().size(), 1u + 1u + 2u);
  const auto ui = involution_of(u);
  EXPECT_TRUE(check_category_laws(*u, budget).passed());
  EXPECT_TRUE(check_involution(*u, ui, budget).passed());
  const auto r = check_unitary(*u, ui, canonical_unitary(u), budget);
  EXPECT_TRUE(r.passed()) << to_json(r).dump(2);
  const auto ip = ip_from_unitary(u, ui, canonical_unitary(u));
  EXPECT_TRUE(check_ip_axioms(*u, ui, ip, SampleBudget::randomized(6)).passed());
}

TEST(UnitaryOf, ObjectCounts) {
  const auto budget = SampleBudget::exhaustive();
  const auto o = finordrev_bundle(2);
  const auto uo = build_unitary_of(o.cat, o.inv, budget);
  EXPECT_EQ(uo->objects().size(), 1u);
  EXPECT_TRUE(check_unitary(*uo, involution_of(uo), canonical_unitary(uo), budget).passed());
  const auto s = srgraph_bundle(3);
  const auto us = build_unitary_of(s.cat, s.inv, budget);
  EXPECT_EQ(us->objects().size(), 2u);
  EXPECT_TRUE(check_involution(*us, involution_of(us), budget).passed());
  EXPECT_TRUE(check_unitary(*us, involution_of(us), canonical_unitary(us), budget).passed());
}

TEST(UnitaryOf, EmbeddingIsFullAndFaithful) {
  const auto budget = SampleBudget::exhaustive();
  const auto fr = finrel_bundle(2);
  const auto uf = build_unitary_of(fr.cat, fr.inv, budget);
  const auto E = embed_dagger_into_unitary(fr.cat, fr.inv, uf, budget);
  EXPECT_TRUE(check_full_faithful(E.base, budget).passed());
  EXPECT_TRUE(check_involutive_functor(E, budget).passed());
  const auto s3 = groupoid_bundle("s3");
  const auto us = build_unitary_of(s3.cat, s3.inv, budget);
  EXPECT_TRUE(check_full_faithful(embed_dagger_into_unitary(s3.cat, s3.inv, us, budget).base, budget).passed());
}

TEST(UnitaryOf, EmbeddingRejectsNonStrict) {
  const auto tw = twistedmat_bundle(1);
  const auto budget = default_budget(*tw.cat, 3);
  const auto u = build_unitary_of(tw.cat, tw.inv, budget);
  EXPECT_THROW(embed_dagger_into_unitary(tw.cat, tw.inv, u, budget), TypeError);
}

TEST(UnitaryOf, TransferFunctors) {
  const auto budget = SampleBudget::exhaustive();
  auto c1 = std::make_shared<const FinRel>(1);
  auto c2 = std::make_shared<const FinRel>(2);
  auto c3 = std::make_shared<const FinRel>(3);
  const auto u1 = build_unitary_of(c1, involution_of(c1), budget);
  const auto u2 = build_unitary_of(c2, involution_of(c2), budget);
  const auto u3 = build_unitary_of(c3, involution_of(c3), budget);

  const auto I = transfer_functor(identity_involutive_functor(c2, involution_of(c2)), u2, u2);
  EXPECT_TRUE(check_transfer(I, budget).passed());
  EXPECT_TRUE(check_involutive_functor(I, budget).passed());
  for (const auto& a : u2->objects()) EXPECT_EQ(I(a), a);

  const auto F = support::finrel_inclusion(c1, c2);
  const auto G = support::finrel_inclusion(c2, c3);
  const auto TF = transfer_functor(F, u1, u2);
  const auto TG = transfer_functor(G, u2, u3);
  EXPECT_TRUE(check_transfer(TF, budget).passed());
  EXPECT_TRUE(check_involutive_functor(TF, budget).passed());
  const auto TGF = transfer_functor(compose_involutive_functors(F, G), u1, u3);
  for (const auto& a : u1->objects()) EXPECT_EQ(TGF(a), TG(TF(a)));
  EXPECT_THROW(transfer_functor(F, u2, u2), ShapeError);
}
