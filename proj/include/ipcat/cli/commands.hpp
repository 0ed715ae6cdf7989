#pragma once

#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ipcat/cli/catfile.hpp"
#include "ipcat/construction.hpp"
#include "ipcat/specialmaps.hpp"

namespace ipcat::cli {

enum Exit : int { ok = 0, law_failure = 1, parse_error = 2, type_error = 3, missing_structure = 4 };

/// Bad command-line arguments.
struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string suite = "all";
  std::optional<std::string> budget;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> object;
  std::vector<std::string> equations;
  std::optional<std::string> equations_file;
  std::optional<std::string> morphism;
};

struct Outcome {
  int code = ok;
  json report;
  std::string summary;
};

/// --budget wins, then IPCAT_BUDGET, then the instance default. A budget is
/// "exhaustive" or a positive sample count per hom-set.
template <Category C>
SampleBudget resolve_budget(const C& c, const Options& o) {
  const std::uint64_t seed = o.seed.value_or(0x5eedULL);
  std::string text;
  if (o.budget) text = *o.budget;
  else if (const char* env = std::getenv("IPCAT_BUDGET")) text = env;
  if (text.empty()) return default_budget(c, 6, seed);
  if (text == "exhaustive") {
    auto b = SampleBudget::exhaustive();
    b.seed = seed;
    return b;
  }
  std::size_t pos = 0;
  unsigned long n = 0;
  try {
    n = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || n == 0) throw UsageError("budget must be \"exhaustive\" or a positive integer, got " + text);
  return SampleBudget::randomized(n, seed);
}

inline json budget_json(const SampleBudget& b) {
  json j{{"mode", std::string(to_string(b.mode))}, {"seed", b.seed}};
  if (b.mode == SampleMode::randomized) j["perHom"] = b.max_morphisms_per_hom;
  return j;
}

inline std::string summarize(const LawReport& r) {
  std::ostringstream s;
  for (const auto& c : r.checks) {
    s << (c.failed() ? "FAIL " : c.passed() ? "ok   " : "?    ") << r.suite << "/" << c.name << " (" << c.cases
      << " cases)";
    if (!c.detail.empty()) s << ": " << c.detail;
    s << "\n";
    if (c.failed() && !c.witness.is_null()) s << "     witness: " << c.witness.dump() << "\n";
  }
  return s.str();
}

/// The attached unitary structure, or one found by search.
template <Category C>
struct UnitaryLookup {
  std::optional<UnitaryStructure<C>> unit;
  std::string source;
  std::string detail;
};

template <Category C>
UnitaryLookup<C> find_unitary(const Bundle<C>& b, const SampleBudget& budget) {
  if (b.unit) return {b.unit, "attached", {}};
  auto s = search_unitary_structure(b.cat, b.inv, budget.hard_cap);
  if (s.found) return {s.found, "searched", {}};
  return {std::nullopt, "none", s.detail};
}

inline LawReport missing_unitary(const std::string& suite, const SampleBudget& b, const std::string& detail) {
  LawReport r(suite, b);
  CheckResult c;
  c.name = "unitary structure exists";
  c.status = Status::fail;
  c.cases = 1;
  c.detail = detail;
  c.witness = json{{"reason", detail}};
  r.add(std::move(c));
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"category", "involution", "unitary", "ip", "adjoint", "special"};
  return names;
}

template <Category C>
Outcome check(const Bundle<C>& b, const Options& o) {
  const C& c = *b.cat;
  const auto budget = resolve_budget(c, o);
  std::vector<std::string> suites;
  if (o.suite == "all") suites = suite_names();
  else if (std::find(suite_names().begin(), suite_names().end(), o.suite) != suite_names().end()) suites = {o.suite};
  else throw UsageError("unknown suite " + o.suite);

  std::optional<UnitaryLookup<C>> lookup;
  const auto unit = [&]() -> const UnitaryLookup<C>& {
    if (!lookup) lookup = find_unitary(b, budget);
    return *lookup;
  };

  std::vector<LawReport> reports;
  for (const auto& s : suites) {
    if (s == "category") {
      reports.push_back(check_category_laws(c, budget));
    } else if (s == "involution") {
      reports.push_back(check_involution(c, b.inv, budget));
    } else if (!unit().unit) {
      reports.push_back(missing_unitary(s, budget, unit().detail));
    } else {
      const auto& u = *unit().unit;
      if (s == "unitary") {
        auto r = check_unitary(c, b.inv, u, budget);
        r.absorb(check_unitary_identities(c, b.inv, u, budget));
        reports.push_back(std::move(r));
      } else if (s == "ip") {
        const auto ip = ip_from_unitary(b.cat, b.inv, u);
        LawReport r("ip", budget);
        r.absorb(check_ip_axioms(c, b.inv, ip, budget));
        r.absorb(check_ip2_equivalence(c, b.inv, ip, budget));
        r.absorb(check_inner_identities(c, b.inv, ip, budget));
        r.absorb(check_ip_unitary_round_trip(b.cat, b.inv, u, budget));
        reports.push_back(std::move(r));
      } else if (s == "adjoint") {
        auto r = check_adjoint_laws(b.cat, b.inv, u, budget);
        r.absorb(check_strictification(strictify(b.cat, b.inv, u), budget));
        reports.push_back(std::move(r));
      } else {
        reports.push_back(check_special_maps(b.cat, b.inv, u, budget));
      }
    }
  }

  Outcome out;
  bool passed = true;
  json rj = json::array();
  for (const auto& r : reports) {
    passed = passed && r.passed();
    rj.push_back(to_json(r));
    out.summary += summarize(r);
  }
  out.report = json{{"command", "check"}, {"instance", b.ref}, {"category", c.name()}, {"suite", o.suite},
                    {"budget", budget_json(budget)}, {"passed", passed}, {"reports", rj}};
  if (lookup) out.report["unitaryStructure"] = lookup->source;
  out.summary += passed ? "PASS\n" : "FAIL\n";
  out.code = passed ? ok : law_failure;
  return out;
}

template <Category C>
Outcome preunitary(const Bundle<C>& b, const dsl::Env<C>& env, const Options& o) {
  const C& c = *b.cat;
  const auto budget = resolve_budget(c, o);
  std::vector<ObjOf<C>> objs;
  if (o.object) {
    auto it = env.objects.find(*o.object);
    if (it == env.objects.end()) throw TypeError("unknown object '" + *o.object + "'");
    objs.push_back(it->second);
  } else {
    objs = budget_objects(c, budget);
  }
  Outcome out;
  json list = json::array();
  for (const auto& x : objs)
    for (const auto& h : preunitary_candidates(c, b.inv, x, budget.hard_cap)) {
      list.push_back(json{{"object", c.obj_json(x)}, {"h", c.payload_json(h.payload)}});
      out.summary += c.obj_json(x).dump() + "  " + c.payload_json(h.payload).dump() + "\n";
    }
  out.summary += std::to_string(list.size()) + " pre-unitary object(s)\n";
  out.report = json{{"command", "preunitary"}, {"instance", b.ref}, {"category", c.name()},
                    {"count", list.size()}, {"preunitary", list}};
  return out;
}

/// Equations from --eq, then --equations FILE (one per line, '#' comments),
/// falling back to the file's "equations" list.
inline std::vector<dsl::Equation> gather_equations(const json& doc, const Options& o) {
  std::vector<dsl::Equation> eqs;
  for (const auto& s : o.equations) eqs.push_back(dsl::parse_equation(s));
  if (o.equations_file) {
    std::istringstream in(read_text_file(*o.equations_file));
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      try {
        eqs.push_back(dsl::parse_equation(line));
      } catch (const ParseError& e) {
        throw ParseError("in " + *o.equations_file + ": " + e.message, n, e.column);
      }
    }
  }
  if (eqs.empty())
    for (const auto& s : doc.value("equations", json::array())) eqs.push_back(dsl::parse_equation(s.get<std::string>()));
  if (eqs.empty()) throw UsageError("no equations given");
  return eqs;
}

template <Category C>
Outcome eval(const Bundle<C>& b, const dsl::Env<C>& env, const json& doc, const Options& o) {
  const C& c = *b.cat;
  const auto eqs = gather_equations(doc, o);
  dsl::Evaluator<C> ev(b, env);
  Outcome out;
  bool all = true;
  json results = json::array();
  for (const auto& eq : eqs) {
    const auto r = ev.eval(eq);
    all = all && r.equal;
    results.push_back(r.to_json(c));
    out.summary += (r.equal ? "equal    " : "unequal  ") + dsl::print(eq) + "\n";
    if (!r.equal)
      out.summary += "  lhs: " + c.payload_json(r.lhs.payload).dump() + "\n  rhs: " + c.payload_json(r.rhs.payload).dump() + "\n";
  }
  out.report = json{{"command", "eval"}, {"instance", b.ref}, {"category", c.name()}, {"passed", all},
                    {"results", results}};
  out.code = all ? ok : law_failure;
  return out;
}

template <Category C>
Outcome classify_cmd(const Bundle<C>& b, const dsl::Env<C>& env, const Options& o) {
  const C& c = *b.cat;
  if (!o.morphism) throw UsageError("classify needs a morphism name or expression");
  const auto budget = resolve_budget(c, o);
  const auto expr = dsl::parse_expr(*o.morphism);
  const auto f = dsl::Evaluator<C>(b, env).eval(*expr).mor;
  const auto lookup = find_unitary(b, budget);
  if (!lookup.unit) throw MissingStructure(lookup.detail);
  const auto k = classify(b.cat, b.inv, *lookup.unit, f, budget);
  Outcome out;
  out.report = json{{"command", "classify"}, {"instance", b.ref}, {"category", c.name()},
                    {"morphism", dsl::print(*expr)}, {"value", mor_json(c, f)},
                    {"budget", budget_json(budget)}, {"classification", k.to_json()},
                    {"unitaryStructure", lookup.source}};
  const auto line = [&](const char* n, const FlagResult& r) {
    out.summary += std::string(n) + ": " + std::string(to_string(r.value));
    if (!r.detail.empty()) out.summary += " (" + r.detail + ")";
    out.summary += "\n";
    if (!r.witness.is_null()) out.summary += "  witness: " + r.witness.dump() + "\n";
  };
  line("isometry", k.isometry);
  line("unitaryMap", k.unitary_map);
  line("hermitian", k.hermitian);
  line("positive", k.positive);
  line("normal", k.normal);
  if (!k.consistent()) out.summary += "criteria disagree\n";
  out.code = k.consistent() ? ok : law_failure;
  return out;
}

/// The presentation with dagger f |-> f*, identity involutor and phi.
inline json strictify_presentation(const Presentation& p, const Involution<Presentation>& inv,
                                   const UnitaryStructure<Presentation>& u) {
  json j = p.to_json();
  json dag = json::object();
  for (const auto& n : p.morphism_names()) dag[n] = adjoint(p, inv, u, p.resolve(n)).payload;
  j["dagger"] = {{"objects", json::object()}, {"morphisms", dag}};
  j["iota"] = json::object();
  json phi = json::object();
  for (const auto& a : p.objects()) phi[a] = Presentation::id_name(a);
  j["phi"] = phi;
  return j;
}

template <Category C>
Outcome strictify_cmd(const Bundle<C>& b, const json& doc, const Options& o) {
  const C& c = *b.cat;
  const auto budget = resolve_budget(c, o);
  const auto lookup = find_unitary(b, budget);
  if (!lookup.unit) throw MissingStructure(lookup.detail);
  const auto& u = *lookup.unit;
  bool strict = is_strict(c, b.inv, budget);
  for (const auto& x : budget_objects(c, budget)) strict = strict && u(x) == c.id(x);

  json outdoc;
  if (strict) {
    outdoc = doc;
  } else if constexpr (std::is_same_v<C, Presentation>) {
    outdoc = strictify_presentation(c, b.inv, u);
    if (doc.contains("equations")) outdoc["equations"] = doc["equations"];
  } else {
    outdoc = doc;
    outdoc["strictified"] = true;
  }
  Outcome out;
  out.report = outdoc;
  out.summary = outdoc.dump(2) + "\n";
  return out;
}

}  // namespace ipcat::cli
