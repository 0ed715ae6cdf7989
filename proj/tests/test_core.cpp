#include <gtest/gtest.h>

#include "support/support.hpp"

using namespace ipcat;
using support::Rng;

namespace {

/// Z/3 with the products r;r and r2;r2 exchanged.
Presentation corrupted_z3() {
  return Presentation::from_json(json::parse(R"({
    "objects": ["A"],
    "morphisms": [{"name": "r", "src": "A", "tgt": "A"}, {"name": "r2", "src": "A", "tgt": "A"}],
    "compose": [["r", "r", "r"], ["r", "r2", "id[A]"], ["r2", "r", "id[A]"], ["r2", "r2", "r2"]],
    "dagger": {"morphisms": {"r": "r2", "r2": "r"}}
  })"));
}

Presentation z3() {
  return Presentation::from_json(json::parse(R"({
    "objects": ["A"],
    "morphisms": [{"name": "r", "src": "A", "tgt": "A"}, {"name": "r2", "src": "A", "tgt": "A"}],
    "compose": [["r", "r", "r2"], ["r", "r2", "id[A]"], ["r2", "r", "id[A]"], ["r2", "r2", "r"]],
    "dagger": {"morphisms": {"r": "r2", "r2": "r"}}
  })"));
}

}  // namespace

TEST(FinRel, HomSetSizesArePowersOfTwo) {
  FinRel c(2);
  const auto b = SampleBudget::exhaustive();
  for (int a = 0; a <= 2; ++a)
    for (int d = 0; d <= 2; ++d) EXPECT_EQ(sample_morphisms(c, a, d, b).size(), std::size_t{1} << (a * d));
}

TEST(FinRel, SingletonHasEmptyAndIdentity) {
  FinRel c(2);
  const auto hom = sample_morphisms(c, 1, 1, SampleBudget::exhaustive());
  ASSERT_EQ(hom.size(), 2u);
  EXPECT_TRUE(hom[0].payload.empty());
  EXPECT_EQ(hom[1], c.id(1));
}

TEST(FinRel, CategoryLawsExhaustive) {
  FinRel c(2);
  const auto r = check_category_laws(c, SampleBudget::exhaustive());
  EXPECT_TRUE(r.passed()) << to_json(r).dump(2);
  // Composable triples among hom-sets of sizes 2^(a b), a, b in {0, 1, 2}.
  std::uint64_t triples = 0;
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int d = 0; d <= 2; ++d)
        for (int e = 0; e <= 2; ++e) triples += (1ull << (a * b)) * (1ull << (b * d)) * (1ull << (d * e));
  EXPECT_EQ(r.find("associativity")->cases, triples);
}

TEST(FinRel, CompositionMatchesBooleanProduct) {
  FinRel c(3);
  Rng rng(11);
  for (int i = 0; i < 300; ++i) {
    const int a = rng.below(4), b = rng.below(4), d = rng.below(4);
    const auto f = support::random_relation(rng, a, b);
    const auto g = support::random_relation(rng, b, d);
    EXPECT_EQ(support::to_bool(c.compose(f, g)), support::bool_compose(support::to_bool(f), support::to_bool(g), a, b, d));
    EXPECT_EQ(support::to_bool(c.dag_mor(f)), support::bool_transpose(support::to_bool(f), a, b));
  }
}

TEST(Groupoid, S3CategoryLaws) {
  auto g = Groupoid::s3();
  const auto r = check_category_laws(g, SampleBudget::exhaustive());
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find("associativity")->cases, 216u);
}

TEST(Groupoid, S3TableIsPermutationComposition) {
  auto g = Groupoid::s3();
  // Diagrammatic: (p;q)(i) = q(p(i)).
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      const auto p = g.payload_json(a), q = g.payload_json(b);
      json pq = json::array();
      for (int i = 0; i < 3; ++i) pq.push_back(q[p[i].get<int>()]);
      EXPECT_EQ(g.payload_json(g.compose(g.element(a), g.element(b)).payload), pq);
    }
}

TEST(Category, CorruptedCompositionFailsWithWitnessTriple) {
  EXPECT_TRUE(check_category_laws(z3(), SampleBudget::exhaustive()).passed());
  const auto r = check_category_laws(corrupted_z3(), SampleBudget::exhaustive());
  ASSERT_FALSE(r.passed());
  const auto* a = r.find("associativity");
  ASSERT_TRUE(a->failed());
  EXPECT_TRUE(a->witness.contains("f") && a->witness.contains("g") && a->witness.contains("h"));
  EXPECT_TRUE(a->witness.contains("lhs") && a->witness.contains("rhs"));
}

TEST(MatInt, ExhaustiveEnumerationOfInfiniteHomThrows) {
  MatRig<mpz_class> c(2);
  EXPECT_THROW(sample_morphisms(c, 1, 1, SampleBudget::exhaustive()), NotEnumerable);
  EXPECT_NO_THROW(sample_morphisms(c, 0, 2, SampleBudget::exhaustive()));
}

TEST(MatInt, RandomizedSamplesAreReproducible) {
  MatRig<mpz_class> c(2);
  const auto b = SampleBudget::randomized(5, 42);
  const auto first = sample_morphisms(c, 1, 1, b);
  EXPECT_EQ(first, sample_morphisms(c, 1, 1, b));
  EXPECT_EQ(first.size(), 5u);
  EXPECT_EQ(first.front(), c.id(1));
  EXPECT_EQ(sample_morphisms(c, 2, 2, b), sample_morphisms(c, 2, 2, b));
}

TEST(MatInt, CompositionIsRowTimesColumn) {
  MatRig<mpz_class> c(2);
  Rng rng(5);
  const auto& s = c.samples();
  for (int t = 0; t < 200; ++t) {
    Matrix<mpz_class> f(2, 2), g(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        f.at(i, j) = s[rng.below(static_cast<int>(s.size()))];
        g.at(i, j) = s[rng.below(static_cast<int>(s.size()))];
      }
    const auto fg = c.compose({2, 2, f}, {2, 2, g});
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) {
        mpz_class sum = 0;
        for (std::size_t j = 0; j < 2; ++j) sum += f.at(i, j) * g.at(j, k);
        EXPECT_EQ(fg.payload.at(i, k), sum);
      }
  }
}

TEST(Budget, HardCapIsEnforced) {
  FinRel c(4);
  auto b = SampleBudget::exhaustive(1000);
  EXPECT_THROW(check_category_laws(c, b), BudgetExceeded);
}

TEST(Budget, TupleSamplerIsDeterministic) {
  auto b = SampleBudget::randomized(4, 9);
  b.max_tuples = 100;
  TupleSampler s1(b, 10000, "law"), s2(b, 10000, "law");
  int kept = 0;
  for (int i = 0; i < 10000; ++i) {
    const bool x = s1.take();
    EXPECT_EQ(x, s2.take());
    kept += x;
  }
  EXPECT_GT(kept, 50);
  EXPECT_LT(kept, 200);
}

TEST(Registry, UnknownInstanceIsReported) {
  EXPECT_THROW(build_instance("no-such-thing"), UnknownInstance);
  EXPECT_THROW(build_instance("groupoid", json{{"group", "a5"}}), UnknownInstance);
}

TEST(Registry, FinRelRefRebuilds) {
  auto inst = build_instance("finrel", json{{"bound", 1}});
  const auto& b = std::get<Bundle<FinRel>>(inst);
  EXPECT_EQ(b.ref, (json{{"instance", "finrel"}, {"params", {{"bound", 1}}}}));
  EXPECT_EQ(b.cat->objects().size(), 2u);
}

TEST(Presentation, RejectsPartialCompositionTable) {
  EXPECT_THROW(Presentation::from_json(json::parse(R"({
    "objects": ["A"], "morphisms": [{"name": "r", "src": "A", "tgt": "A"}], "compose": []
  })")),
               TypeError);
}

TEST(Presentation, RejectsMistypedDagger) {
  EXPECT_THROW(Presentation::from_json(json::parse(R"({
    "objects": ["A", "B"], "morphisms": [{"name": "u", "src": "A", "tgt": "B"}],
    "dagger": {"morphisms": {"u": "u"}}
  })")),
               TypeError);
}

TEST(LawReport, JsonCarriesBudgetAndWitness) {
  const auto r = check_category_laws(corrupted_z3(), SampleBudget::exhaustive());
  const auto j = to_json(r);
  EXPECT_EQ(j["suite"], "category");
  EXPECT_EQ(j["passed"], false);
  EXPECT_EQ(j["budget"]["mode"], "exhaustive");
  bool witnessed = false;
  for (const auto& c : j["checks"])
    if (c["status"] == "fail") witnessed = c.contains("witness");
  EXPECT_TRUE(witnessed);
}

// ---- DSL ----

TEST(Dsl, ParsesGrammar) {
  const auto e = dsl::parse_expr("ip(f ; g, dag(h)) ; phi[dag(X)] ; inv(iota[A])");
  EXPECT_EQ(dsl::print(*e), "ip(f ; g, dag(h)) ; phi[dag(X)] ; inv(iota[A])");
  EXPECT_EQ(e->kind, dsl::Kind::comp);
  EXPECT_EQ(e->args[1]->kind, dsl::Kind::inv);
}

TEST(Dsl, CompositionIsLeftAssociative) {
  const auto e = dsl::parse_expr("a ; b ; c");
  ASSERT_EQ(e->kind, dsl::Kind::comp);
  EXPECT_EQ(e->args[0]->kind, dsl::Kind::comp);
  EXPECT_EQ(dsl::print(*dsl::parse_expr("a ; (b ; c)")), "a ; (b ; c)");
  EXPECT_EQ(dsl::print(*dsl::parse_expr("(a ; b) ; c")), "a ; b ; c");
}

TEST(Dsl, EquationRoundTrip) {
  const auto eq = dsl::parse_equation("adj(f)==phi[B];dag(f);inv(phi[A])");
  EXPECT_EQ(dsl::print(eq), "adj(f) == phi[B] ; dag(f) ; inv(phi[A])");
  EXPECT_EQ(dsl::parse_equation(dsl::print(eq)), eq);
}

TEST(Dsl, ParseErrorsCarryPosition) {
  try {
    dsl::parse_expr("f ;\n  dag(g");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 2u);
    EXPECT_EQ(e.column, 8u);
  }
  EXPECT_THROW(dsl::parse_expr("id(f)"), ParseError);
  EXPECT_THROW(dsl::parse_expr("f ;"), ParseError);
  EXPECT_THROW(dsl::parse_expr("f g"), ParseError);
  EXPECT_THROW(dsl::parse_equation("f == g == h"), ParseError);
  EXPECT_THROW(dsl::parse_expr("phi[iota]"), ParseError);
  EXPECT_THROW(dsl::parse_expr("dag"), ParseError);
}

TEST(Dsl, RoundTripProperty) {
  const auto r = support::parser_round_trip(2024, 1000);
  EXPECT_EQ(r.checked, 1000);
  EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(CatFile, MalformedJsonReportsLineAndColumn) {
  try {
    parse_json_text("{\n  \"a\": 1,\n  \"b\": }\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line, 3u);
    EXPECT_EQ(e.column, 8u);
  }
}
