// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>

#include "support/support.hpp"

using namespace ipcat;

namespace {

struct Tally {
  std::vector<std::string> problems;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
  void require(const LawReport& r, const std::string& label) {
    if (const auto* f = r.first_failure()) problems.push_back(label + ": " + f->name + " " + to_json(*f).dump());
  }
};

int failures = 0;

void criterion(int n, const std::string& description, const std::function<void(Tally&)>& body) {
  Tally t;
  try {
    body(t);
  } catch (const std::exception& e) {
    t.problems.push_back(std::string("exception: ") + e.what());
  }
  const bool ok = t.problems.empty();
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << description << "\n";
  for (const auto& p : t.problems) std::cout << "    " << p.substr(0, 400) << "\n";
  std::cout.flush();
  failures += !ok;
}

template <Category C>
SampleBudget budget_for(const Bundle<C>& b, std::size_t per_hom = 4) {
  return default_budget(*b.cat, per_hom);
}

// Runs `f(bundle, label)` over every instance that carries a unitary structure.
template <class F>
void for_unitary_instances(F&& f) {
  f(finrel_bundle(2), "finrel(2)");
  f(matrig_bundle<Boolean>(2), "mat-bool(2)");
  f(matrig_bundle<mpz_class>(2), "mat-int(2)");
  f(matrig_bundle<GaussQ>(2), "mat-gauss(2)");
  f(phasemat_bundle(2), "phase-mat(2)");
  for (const auto* g : {"s3", "s3-twisted", "z4"}) f(groupoid_bundle(g), g);
  f(twistedmat_bundle(2), "twistedmat(2)");
  const auto swap = load_catfile(support::sample("swap-pair.cat"));
  f(std::get<Bundle<Presentation>>(swap.instance), "swap-pair");
}

void involution_suite(Tally& t) {
  const auto start = std::chrono::steady_clock::now();
  const auto run = [&](const auto& b, const std::string& label) {
    const auto budget = budget_for(b, 6);
    t.require(check_category_laws(*b.cat, budget), label);
    t.require(check_involution(*b.cat, b.inv, budget), label);
  };
  run(finrel_bundle(2), "finrel(2)");
  run(matrig_bundle<Boolean>(2), "mat-bool(2)");
  run(matrig_bundle<mpz_class>(2), "mat-int(2)");
  run(matrig_bundle<GaussQ>(2), "mat-gauss(2)");
  run(groupoid_bundle("s3"), "s3");
  run(srgraph_bundle(3), "srgraph(3)");
  run(finordrev_bundle(2), "finordrev(2)");
  run(twistedmat_bundle(2), "twistedmat(2)");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.require(secs < 60.0, "runtime " + std::to_string(secs) + " s is not under 60 s");
}

void ip_suite(Tally& t) {
  for_unitary_instances([&](const auto& b, const std::string& label) {
    const auto budget = budget_for(b, 3);
    const auto ip = ip_from_unitary(b.cat, b.inv, *b.unit);
    t.require(check_ip_unitary_round_trip(b.cat, b.inv, *b.unit, budget), label);
    t.require(check_ip_axioms(*b.cat, b.inv, ip, budget), label);
    t.require(check_inner_identities(*b.cat, b.inv, ip, budget), label);
    t.require(check_ip2_equivalence(*b.cat, b.inv, ip, budget), label);
  });
  // The equivalence also holds for combinators that break some dagger laws.
  const auto b = groupoid_bundle("s3-twisted");
  const auto c = b.cat;
  const auto inv = b.inv;
  for (int u = 0; u < c->order(); ++u) {
    InnerProduct<Groupoid> ip{[c, inv, u](const Groupoid::Mor& f, const Groupoid::Mor& g) {
      return c->compose(c->compose(f, c->element(u)), inv.dag(g));
    }};
    const auto r = check_ip2_equivalence(*c, inv, ip, SampleBudget::exhaustive());
    t.require(r.find("equivalence")->passed(), "equivalence fails for combinator f;" + std::to_string(u) + ";g^dag");
  }
}

void adjoint_suite(Tally& t) {
  for_unitary_instances([&](const auto& b, const std::string& label) {
    t.require(check_adjoint_laws(b.cat, b.inv, *b.unit, budget_for(b, 3)), label);
  });
  const auto fr = finrel_bundle(2);
  const auto r = check_adjoint_laws(fr.cat, fr.inv, *fr.unit, SampleBudget::exhaustive());
  t.require(r.find("adjoint uniqueness")->passed(), "finrel(2) uniqueness search did not pass");
}

void strictification_suite(Tally& t) {
  const auto tw = twistedmat_bundle(2);
  const auto st = strictify(tw.cat, tw.inv, *tw.unit);
  const auto budget = budget_for(tw, 4);
  t.require(check_involution(*tw.cat, st.inv, budget), "strictified involution");
  for (const auto& x : tw.cat->objects()) t.require(st.inv.iota(x) == tw.cat->id(x), "iota is not the identity");
  const auto r = check_strictification(st, budget);
  t.require(r, "strictification");
  for (const auto* name : {"involutive functor", "unitary functor", "inner product functor", "inner product through phi"}) {
    bool seen = false;
    for (const auto& c : r.checks) seen = seen || c.name.rfind(name, 0) == 0;
    t.require(seen, std::string("strictification report has no ") + name + " checks");
  }
}

template <Category C>
void preunitary_equals_hermitian_iso(Tally& t, const Bundle<C>& b, const std::string& label) {
  Classifier<C> k(b.cat, b.inv, *b.unit, SampleBudget::exhaustive());
  for (const auto& x : b.cat->objects()) {
    const auto pre = preunitary_candidates(*b.cat, b.inv, x);
    for (const auto& h : candidates(*b.cat, x, x)) {
      const bool herm_iso = k.hermitian(h).value == Flag::yes && b.cat->inverse(h).has_value();
      const bool is_pre = std::find(pre.begin(), pre.end(), h) != pre.end();
      t.require(herm_iso == is_pre, label + ": pre-unitary and Hermitian iso disagree on " + mor_json(*b.cat, h).dump());
    }
  }
}

template <Category C>
void unitary_of_suite(Tally& t, const Bundle<C>& b, const std::string& label) {
  const auto budget = SampleBudget::exhaustive();
  const auto u = build_unitary_of(b.cat, b.inv, budget);
  const auto ui = involution_of(u);
  const auto phi = canonical_unitary(u);
  const auto sampled = SampleBudget::randomized(6);
  t.require(check_category_laws(*u, budget), label);
  t.require(check_involution(*u, ui, budget), label);
  t.require(check_unitary(*u, ui, phi, budget), label);
  t.require(check_unitary_identities(*u, ui, phi, budget), label);
  const auto ip = ip_from_unitary(u, ui, phi);
  t.require(check_ip_axioms(*u, ui, ip, sampled), label);
  t.require(check_ip_unitary_round_trip(u, ui, phi, sampled), label);
}

void construction_suite(Tally& t) {
  const auto ex = SampleBudget::exhaustive();
  const auto sr = srgraph_bundle(3);
  std::multiset<int> sizes;
  for (const auto& p : enumerate_preunitary(*sr.cat, sr.inv, ex)) sizes.insert(static_cast<int>(p.base.n));
  t.require(sizes == std::multiset<int>{0, 1}, "srgraph(3) pre-unitary objects are not the empty and one-vertex graphs");
  const auto fo = finordrev_bundle(2);
  const auto po = enumerate_preunitary(*fo.cat, fo.inv, ex);
  t.require(po.size() == 1 && po[0].base == 0, "finordrev(2) pre-unitary objects are not {0}");
  preunitary_equals_hermitian_iso(t, finrel_bundle(2), "finrel(2)");
  preunitary_equals_hermitian_iso(t, groupoid_bundle("s3"), "s3");
  unitary_of_suite(t, finrel_bundle(2), "Unitary(finrel(2))");
  unitary_of_suite(t, sr, "Unitary(srgraph(3))");
  unitary_of_suite(t, fo, "Unitary(finordrev(2))");
}

void special_maps_suite(Tally& t) {
  for_unitary_instances([&](const auto& b, const std::string& label) {
    t.require(check_special_maps(b.cat, b.inv, *b.unit, budget_for(b, 4)), label);
  });
}

void tether_suite(Tally& t) {
  const auto lib = support::tether_library();
  t.require(lib.size() >= 5, "library has fewer than 5 transformations");
  bool has_involutor = false;
  for (const auto& c : lib) {
    has_involutor = has_involutor || c.name.find("involutor") != std::string::npos;
    const auto r = c.run();
    const bool cube = support::cube_commutes(r);
    t.require(cube == c.expect_cube, c.name + ": cube verdict is unexpected");
    if (cube) t.require(r.find("components invertible")->passed(), c.name + ": cube commutes but a component is not invertible");
    if (!c.expect_cube) t.require(r.find(c.broken_face)->failed(), c.name + ": does not fail " + c.broken_face);
  }
  t.require(has_involutor, "library does not include the involutor");
}

void cli_suite(Tally& t) {
  for (const auto* f : {"twistedmat.cat", "mat-int.cat", "finrel2.cat"}) {
    const std::string args = "check " + support::sample(f) + " --json --seed 7";
    const auto a = support::run_cli(args);
    const auto b = support::run_cli(args);
    t.require(a.code == 0 && !a.out.empty(), std::string(f) + ": check did not pass");
    t.require(a.out == b.out, std::string(f) + ": reports differ between runs");
  }
  const auto rt = support::parser_round_trip(2024, 1000);
  t.require(rt.checked == 1000 && rt.failures == 0,
            "parser round trip: " + std::to_string(rt.failures) + " of " + std::to_string(rt.checked) + " failed " +
                rt.first_failure);
}

}  // namespace

int main() {
  criterion(1, "category and involution laws on all instances in under 60 s", involution_suite);
  criterion(2, "unitary/inner-product round trips, axioms, inner identities, dagger-law equivalence", ip_suite);
  criterion(3, "adjoint laws and adjoint uniqueness in finrel(2)", adjoint_suite);
  criterion(4, "strictification of twisted matrices", strictification_suite);
  criterion(5, "pre-unitary objects and Unitary(X) construction", construction_suite);
  criterion(6, "special-map criteria agree and containments hold", special_maps_suite);
  criterion(7, "cube check implies invertible components on the tether library", tether_suite);
  criterion(8, "CLI reports are deterministic and the parser round-trips", cli_suite);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << "\n";
  return failures == 0 ? 0 : 1;
}
