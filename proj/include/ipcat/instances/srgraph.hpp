#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ipcat/core/category.hpp"

namespace ipcat {

/// A symmetric reflexive relation on {0..n-1}. Loops are implicit; `edges`
/// holds one bit per unordered pair i < j.
struct SRObj {
  int n = 0;
  std::uint32_t edges = 0;

  friend bool operator==(const SRObj&, const SRObj&) = default;
};

/// Symmetric reflexive graphs and edge-preserving bijections. The dagger
/// sends a graph to its complement (keeping the diagonal) and a bijection to
/// its inverse, read as a map between the complements. X^†† = X and the
/// involutor is the identity.
class SRGraph {
 public:
  using Obj = SRObj;
  using Payload = std::vector<int>;  // image of each vertex
  using Mor = Morphism<Obj, Payload>;

  explicit SRGraph(int bound) : bound_(bound) {
    if (bound < 0 || bound > 4) throw TypeError("srgraph bound must be between 0 and 4");
  }

  std::string name() const { return "srgraph(" + std::to_string(bound_) + ")"; }

  static int pair_bit(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
  }
  static int pair_count(int n) { return n * (n - 1) / 2; }

  static bool related(const SRObj& x, int i, int j) { return i == j || (x.edges >> pair_bit(i, j) & 1); }

  std::vector<Obj> objects() const {
    std::vector<Obj> out;
    for (int n = 0; n <= bound_; ++n)
      for (std::uint32_t e = 0; e < (1u << pair_count(n)); ++e) out.push_back({n, e});
    return out;
  }

  Mor id(const Obj& a) const {
    Payload p(a.n);
    std::iota(p.begin(), p.end(), 0);
    return {a, a, p};
  }

  Mor compose(const Mor& f, const Mor& g) const {
    if (f.tgt != g.src) detail::throw_not_composable(*this, f, g);
    Payload p(f.src.n);
    for (int i = 0; i < f.src.n; ++i) p[i] = g.payload[f.payload[i]];
    return {f.src, g.tgt, p};
  }

  static bool preserves(const SRObj& x, const SRObj& y, const Payload& p) {
    for (int i = 0; i < x.n; ++i)
      for (int j = i + 1; j < x.n; ++j)
        if (related(x, i, j) && !related(y, p[i], p[j])) return false;
    return true;
  }

  /// Edge-preserving bijections x -> y in lexicographic order.
  std::vector<Payload> homs(const SRObj& x, const SRObj& y) const {
    std::vector<Payload> out;
    if (x.n != y.n) return out;
    Payload p(x.n);
    std::iota(p.begin(), p.end(), 0);
    do
      if (preserves(x, y, p)) out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  bool hom_is_finite(const Obj&, const Obj&) const { return true; }
  std::uint64_t support_size(const Obj& a, const Obj& b) const { return homs(a, b).size(); }
  Mor support_at(const Obj& a, const Obj& b, std::uint64_t i) const { return {a, b, homs(a, b).at(i)}; }

  /// A bijection is invertible when its inverse also preserves the relation.
  std::optional<Mor> inverse(const Mor& f) const {
    auto q = invert(f.payload);
    if (!preserves(f.tgt, f.src, q)) return std::nullopt;
    return Mor{f.tgt, f.src, q};
  }

  Obj dag_obj(const Obj& a) const { return {a.n, ~a.edges & ((1u << pair_count(a.n)) - 1)}; }
  Mor dag_mor(const Mor& f) const { return {dag_obj(f.tgt), dag_obj(f.src), invert(f.payload)}; }
  Mor iota(const Obj& a) const { return id(a); }

  json obj_json(const Obj& a) const {
    json e = json::array();
    for (int i = 0; i < a.n; ++i)
      for (int j = i + 1; j < a.n; ++j)
        if (related(a, i, j)) e.push_back({i, j});
    return json{{"n", a.n}, {"edges", e}};
  }
  json payload_json(const Payload& p) const { return p; }

  Obj parse_obj(const json& j) const {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
      throw TypeError("srgraph object must be {\"n\": size, \"edges\": [[i, j], ...]}, got " + j.dump());
    SRObj x{j["n"].get<int>(), 0};
    if (x.n < 0 || x.n > bound_) throw TypeError("srgraph object size out of range: " + j.dump());
    for (const auto& e : j.value("edges", json::array())) {
      if (!e.is_array() || e.size() != 2) throw TypeError("srgraph edge must be a pair, got " + e.dump());
      const int a = e[0].get<int>(), b = e[1].get<int>();
      if (a < 0 || b < 0 || a >= x.n || b >= x.n) throw TypeError("srgraph edge out of range: " + e.dump());
      if (a != b) x.edges |= 1u << pair_bit(a, b);
    }
    return x;
  }

  Mor parse_mor(const Obj& a, const Obj& b, const json& j) const {
    if (!j.is_array() || static_cast<int>(j.size()) != a.n || a.n != b.n)
      throw TypeError("srgraph morphism must be a permutation of the vertices, got " + j.dump());
    Payload p = j.get<Payload>();
    Payload sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < a.n; ++i)
      if (sorted[i] != i) throw TypeError("not a bijection: " + j.dump());
    if (!preserves(a, b, p)) throw TypeError("bijection does not preserve the relation: " + j.dump());
    return {a, b, p};
  }

 private:
  static Payload invert(const Payload& p) {
    Payload q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
  }

  int bound_;
};

}  // namespace ipcat
