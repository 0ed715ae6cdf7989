#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ipcat/core/category.hpp"

namespace ipcat {

/// Finite sets {0..n-1} for n <= bound and relations between them.
/// A relation is a sorted, duplicate-free list of pairs; the dagger is the
/// transpose and the involutor is the identity.
class FinRel {
 public:
  using Obj = int;
  using Payload = std::vector<std::pair<int, int>>;
  using Mor = Morphism<Obj, Payload>;

  explicit FinRel(int bound) : bound_(bound) {
    if (bound < 0 || bound > 4) throw TypeError("finrel bound must be between 0 and 4");
  }

  std::string name() const { return "finrel(" + std::to_string(bound_) + ")"; }
  int bound() const { return bound_; }

  std::vector<Obj> objects() const {
    std::vector<Obj> out;
    for (int n = 0; n <= bound_; ++n) out.push_back(n);
    return out;
  }

  Mor id(Obj a) const {
    Payload p;
    for (int i = 0; i < a; ++i) p.emplace_back(i, i);
    return {a, a, p};
  }

  Mor compose(const Mor& f, const Mor& g) const {
    if (f.tgt != g.src) detail::throw_not_composable(*this, f, g);
    Payload p;
    for (auto [i, j] : f.payload)
      for (auto [k, l] : g.payload)
        if (j == k) p.emplace_back(i, l);
    return {f.src, g.tgt, canonical(std::move(p))};
  }

  bool hom_is_finite(Obj, Obj) const { return true; }
  std::uint64_t support_size(Obj a, Obj b) const { return std::uint64_t{1} << (a * b); }

  /// Bit r*b + c of i says whether (r, c) is related.
  Mor support_at(Obj a, Obj b, std::uint64_t i) const {
    Payload p;
    for (int r = 0; r < a; ++r)
      for (int c = 0; c < b; ++c)
        if (i >> (r * b + c) & 1) p.emplace_back(r, c);
    return {a, b, p};
  }

  /// Invertible relations are the graphs of bijections.
  std::optional<Mor> inverse(const Mor& f) const {
    if (f.src != f.tgt) return std::nullopt;
    std::vector<int> out(f.src, 0), in(f.tgt, 0);
    for (auto [i, j] : f.payload) ++out[i], ++in[j];
    for (int n : out) if (n != 1) return std::nullopt;
    for (int n : in) if (n != 1) return std::nullopt;
    return transpose(f);
  }

  Obj dag_obj(Obj a) const { return a; }
  Mor dag_mor(const Mor& f) const { return transpose(f); }
  Mor iota(Obj a) const { return id(a); }

  json obj_json(Obj a) const { return a; }
  json payload_json(const Payload& p) const {
    json j = json::array();
    for (auto [i, k] : p) j.push_back({i, k});
    return j;
  }

  Obj parse_obj(const json& j) const {
    if (!j.is_number_integer()) throw TypeError("finrel object must be an integer, got " + j.dump());
    const int n = j.get<int>();
    if (n < 0 || n > bound_) throw TypeError("finrel object " + j.dump() + " out of range");
    return n;
  }

  Mor parse_mor(Obj a, Obj b, const json& j) const {
    if (!j.is_array()) throw TypeError("relation must be a list of pairs, got " + j.dump());
    Payload p;
    for (const auto& e : j) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        throw TypeError("relation entry must be a pair of integers, got " + e.dump());
      const int r = e[0].get<int>(), c = e[1].get<int>();
      if (r < 0 || r >= a || c < 0 || c >= b) throw TypeError("relation pair " + e.dump() + " out of range");
      p.emplace_back(r, c);
    }
    return {a, b, canonical(std::move(p))};
  }

  static Mor transpose(const Mor& f) {
    Payload p;
    for (auto [i, j] : f.payload) p.emplace_back(j, i);
    return {f.tgt, f.src, canonical(std::move(p))};
  }

 private:
  static Payload canonical(Payload p) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
  }

  int bound_;
};

}  // namespace ipcat
