#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ipcat/core/budget.hpp"

namespace ipcat {

using json = nlohmann::json;

enum class Status { pass, fail, unknown };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::unknown: return "unknown";
  }
  return "unknown";
}

/// Outcome of one named law over all the cases it was evaluated on.
/// A failing check always carries the first counterexample found.
struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::uint64_t cases = 0;
  json witness;  // null unless status == fail
  std::string detail;

  bool passed() const { return status == Status::pass; }
  bool failed() const { return status == Status::fail; }
};

struct LawReport {
  std::string suite;
  std::vector<CheckResult> checks;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;

  LawReport() = default;
  LawReport(std::string suite_name, const SampleBudget& b)
      : suite(std::move(suite_name)), mode(to_string(b.mode)), seed(b.seed) {}

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.failed(); });
  }

  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  const CheckResult* first_failure() const {
    for (const auto& c : checks)
      if (c.failed()) return &c;
    return nullptr;
  }

  void add(CheckResult r) { checks.push_back(std::move(r)); }

  /// Appends another report's checks, prefixing each with its suite name.
  void absorb(const LawReport& other) {
    for (auto c : other.checks) {
      c.name = other.suite + "/" + c.name;
      checks.push_back(std::move(c));
    }
  }

  std::uint64_t total_cases() const {
    std::uint64_t n = 0;
    for (const auto& c : checks) n += c.cases;
    return n;
  }
};

inline json to_json(const CheckResult& c) {
  json j;
  j["name"] = c.name;
  j["status"] = std::string(to_string(c.status));
  j["cases"] = c.cases;
  if (!c.witness.is_null()) j["witness"] = c.witness;
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

inline json to_json(const LawReport& r) {
  json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed();
  j["budget"] = {{"mode", r.mode}, {"seed", r.seed}, {"cases", r.total_cases()}};
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace ipcat
