#pragma once

#include <cstdint>
#include <cstdio>
#include <sys/wait.h>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ipcat/cli/catfile.hpp"
#include "ipcat/construction.hpp"
#include "ipcat/instances/registry.hpp"
#include "ipcat/specialmaps.hpp"

namespace support {

using namespace ipcat;

/// splitmix64 stream for property tests.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool coin() { return next() & 1; }
};

// ---- FinRel oracle: relations as boolean matrices ----

using BoolMat = std::vector<std::vector<bool>>;

inline BoolMat to_bool(const FinRel::Mor& f) {
  BoolMat m(f.src, std::vector<bool>(f.tgt, false));
  for (auto [i, j] : f.payload) m[i][j] = true;
  return m;
}

inline BoolMat bool_compose(const BoolMat& a, const BoolMat& b, int n, int m, int k) {
  BoolMat out(n, std::vector<bool>(k, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      for (int l = 0; l < k; ++l)
        if (a[i][j] && b[j][l]) out[i][l] = true;
  return out;
}

inline BoolMat bool_transpose(const BoolMat& a, int n, int m) {
  BoolMat out(m, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) out[j][i] = a[i][j];
  return out;
}

inline FinRel::Mor random_relation(Rng& rng, int a, int b) {
  FinRel::Payload p;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j)
      if (rng.coin()) p.emplace_back(i, j);
  return {a, b, p};
}

inline FinRel::Mor relation(int a, int b, FinRel::Payload p) {
  std::sort(p.begin(), p.end());
  return {a, b, p};
}

// ---- DSL expression generator ----

inline std::string gen_name(Rng& rng, bool object) {
  static const std::vector<std::string> objs{"A", "B", "X", "Y2", "obj_1"};
  static const std::vector<std::string> mors{"f", "g", "h'", "k_2", "alpha", "idx", "dagger", "phi0"};
  const auto& pool = object ? objs : mors;
  return pool[rng.below(static_cast<int>(pool.size()))];
}

inline dsl::ObjTerm gen_obj(Rng& rng) { return {gen_name(rng, true), rng.below(3)}; }

inline dsl::ExprPtr gen_expr(Rng& rng, int depth) {
  using dsl::Kind;
  const int choice = depth <= 0 ? rng.below(4) : rng.below(10);
  switch (choice) {
    case 0: return dsl::make_name(gen_name(rng, false));
    case 1: return dsl::make_obj(Kind::id, gen_obj(rng));
    case 2: return dsl::make_obj(Kind::iota, gen_obj(rng));
    case 3: return dsl::make_obj(Kind::phi, gen_obj(rng));
    case 4: return dsl::make_unary(Kind::dag, gen_expr(rng, depth - 1));
    case 5: return dsl::make_unary(Kind::adj, gen_expr(rng, depth - 1));
    case 6: return dsl::make_unary(Kind::inv, gen_expr(rng, depth - 1));
    case 7: return dsl::make_binary(Kind::ip, gen_expr(rng, depth - 1), gen_expr(rng, depth - 1));
    case 8: return dsl::make_binary(Kind::dip, gen_expr(rng, depth - 1), gen_expr(rng, depth - 1));
    default: return dsl::make_binary(Kind::comp, gen_expr(rng, depth - 1), gen_expr(rng, depth - 1));
  }
}

/// A non-canonical rendering: random whitespace and redundant parentheses
/// around the left factor of a composite.
inline std::string noisy_print(const dsl::Expr& e, Rng& rng) {
  using dsl::Kind;
  const auto ws = [&] { return std::string(rng.below(3), rng.coin() ? ' ' : '\n'); };
  const auto obj = [&](const dsl::ObjTerm& o) {
    std::string s = o.name;
    for (int i = 0; i < o.dags; ++i) s = "dag" + ws() + "(" + ws() + s + ws() + ")";
    return s;
  };
  switch (e.kind) {
    case Kind::name: return ws() + e.name + ws();
    case Kind::id: return "id" + ws() + "[" + obj(e.obj) + "]";
    case Kind::iota: return "iota[" + ws() + obj(e.obj) + "]";
    case Kind::phi: return ws() + "phi[" + obj(e.obj) + ws() + "]";
    case Kind::dag: return "dag(" + noisy_print(*e.args[0], rng) + ")";
    case Kind::adj: return "adj" + ws() + "(" + noisy_print(*e.args[0], rng) + ")";
    case Kind::inv: return "inv(" + noisy_print(*e.args[0], rng) + ")" + ws();
    case Kind::ip: return "ip(" + noisy_print(*e.args[0], rng) + "," + noisy_print(*e.args[1], rng) + ")";
    case Kind::dip: return "dip(" + noisy_print(*e.args[0], rng) + ws() + "," + noisy_print(*e.args[1], rng) + ")";
    case Kind::comp: {
      auto l = noisy_print(*e.args[0], rng);
      if (rng.coin()) l = "(" + l + ")";
      return l + ";" + ws() + "(" + noisy_print(*e.args[1], rng) + ")";
    }
  }
  return {};
}

/// Checks 1000 generated expressions: canonical print re-parses to the same
/// tree, printing is a fixed point, and noisy renderings parse to the same
/// tree. Returns the number of failures and the first offending string.
struct RoundTrip {
  int checked = 0;
  int failures = 0;
  std::string first_failure;
};

inline RoundTrip parser_round_trip(std::uint64_t seed, int count = 1000) {
  RoundTrip out;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto e = gen_expr(rng, 1 + rng.below(5));
    const auto s = dsl::print(*e);
    bool ok = false;
    try {
      const auto back = dsl::parse_expr(s);
      const auto noisy = noisy_print(*e, rng);
      ok = *back == *e && dsl::print(*back) == s && *dsl::parse_expr(noisy) == *e;
    } catch (const std::exception&) {
      ok = false;
    }
    ++out.checked;
    if (!ok && out.failures++ == 0) out.first_failure = s;
  }
  return out;
}

// ---- Tether library ----

/// A constructed achiral transformation. Near-misses name the cube face
/// they are built to break.
struct TetherCase {
  std::string name;
  bool expect_cube = true;
  std::string broken_face;
  std::function<LawReport()> run;
};

inline bool cube_commutes(const LawReport& r) {
  for (const char* n : {"component typing", "naturality", cube_face::top, cube_face::left, cube_face::back,
                        cube_face::front, cube_face::bottom, cube_face::right}) {
    const auto* c = r.find(n);
    if (!c || c->failed()) return false;
  }
  return true;
}

inline InvolutiveFunctor<FinRel, FinRel> finrel_inclusion(std::shared_ptr<const FinRel> small,
                                                          std::shared_ptr<const FinRel> big) {
  Functor<FinRel, FinRel> base{small, big, [](int x) { return x; }, [](const FinRel::Mor& f) { return f; }};
  return {base, involution_of(small), involution_of(big), [big](int x) { return big->id(x); }};
}

inline std::vector<TetherCase> tether_library() {
  const auto b = SampleBudget::exhaustive();
  std::vector<TetherCase> lib;

  auto rel = std::make_shared<const FinRel>(2);
  auto rel1 = std::make_shared<const FinRel>(1);
  const auto rinv = involution_of(rel);
  lib.push_back({"identity on the identity functor of finrel", true, "", [=] {
                   return check_achiral_transformation(identity_transformation(identity_involutive_functor(rel, rinv)), b);
                 }});
  lib.push_back({"involutor of finrel", true, "",
                 [=] { return check_achiral_transformation(involutor_transformation(rel, rinv), b); }});
  lib.push_back({"involutor of finrel whiskered by an inclusion", true, "", [=] {
                   return check_achiral_transformation(whisker_left(finrel_inclusion(rel1, rel), involutor_transformation(rel, rinv)), b);
                 }});

  const auto phase = phasemat_bundle(2);
  const auto pc = phase.cat;
  const auto pinv = phase.inv;
  const auto pb = default_budget(*pc, 4, 7);
  lib.push_back({"involutor of phase matrices (iota = -1)", true, "",
                 [=] { return check_achiral_transformation(involutor_transformation(pc, pinv), pb); }});
  lib.push_back({"phase i on the identity functor of phase matrices", true, "", [=] {
                   auto id = identity_involutive_functor(pc, pinv);
                   AchiralTransformation<MatRig<GaussQ>, MatRig<GaussQ>> a{
                       id, id, [pc](std::size_t n) { return pc->scalar(n, GaussQ::i()); }};
                   return check_achiral_transformation(a, pb);
                 }});
  lib.push_back({"involutor of phase matrices whiskered by the double dagger", true, "", [=] {
                   return check_achiral_transformation(
                       whisker_right(involutor_transformation(pc, pinv), double_dagger_functor(pc, pinv)), pb);
                 }});

  const auto tw = groupoid_bundle("s3-twisted");
  const auto gc = tw.cat;
  const auto ginv = tw.inv;
  lib.push_back({"involutor of twisted s3", true, "",
                 [=] { return check_achiral_transformation(involutor_transformation(gc, ginv), b); }});
  lib.push_back({"identity stacked on the involutor of twisted s3", true, "", [=] {
                   auto iota = involutor_transformation(gc, ginv);
                   return check_achiral_transformation(vertical_composite(identity_transformation(iota.from), iota), b);
                 }});

  lib.push_back({"empty relation on the identity functor of finrel", false, cube_face::bottom, [=] {
                   auto id = identity_involutive_functor(rel, rinv);
                   AchiralTransformation<FinRel, FinRel> a{id, id, [](int x) { return FinRel::Mor{x, x, {}}; }};
                   return check_achiral_transformation(a, b);
                 }});
  const auto zb = matrig_bundle<mpz_class>(2);
  const auto zc = zb.cat;
  const auto zinv = zb.inv;
  lib.push_back({"scalar 2 on the identity functor of integer matrices", false, cube_face::bottom, [=] {
                   auto id = identity_involutive_functor(zc, zinv);
                   AchiralTransformation<MatRig<mpz_class>, MatRig<mpz_class>> a{
                       id, id, [zc](std::size_t n) { return zc->scalar(n, mpz_class(2)); }};
                   return check_achiral_transformation(a, default_budget(*zc, 4, 7));
                 }});
  lib.push_back({"involutor of phase matrices scaled by 2", false, cube_face::right, [=] {
                   auto iota = involutor_transformation(pc, pinv);
                   iota.component = [pc](std::size_t n) { return pc->scalar(n, GaussQ(-2)); };
                   return check_achiral_transformation(iota, pb);
                 }});
  return lib;
}

// ---- running the CLI ----

struct Run {
  int code = -1;
  std::string out;
};

inline Run run_cli(const std::string& args, bool with_stderr = false) {
  Run r;
  const std::string cmd = std::string(IPCAT_BIN) + " " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string sample(const std::string& name) { return std::string(IPCAT_SAMPLES) + "/" + name; }

}  // namespace support
