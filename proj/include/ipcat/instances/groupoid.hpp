#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "ipcat/core/category.hpp"

namespace ipcat {

/// A finite group as a one-object category. Elements are indices into the
/// multiplication table; f ; g is the product "f then g".
///
/// The dagger is f |-> t^-1 f^-1 t for a fixed twist t, with involutor t^2.
/// The untwisted case t = e is the usual groupoid dagger f |-> f^-1.
class Groupoid {
 public:
  using Obj = int;
  using Payload = int;
  using Mor = Morphism<Obj, Payload>;

  Groupoid(std::string name, std::vector<json> labels, std::vector<std::vector<int>> table, int twist = -1)
      : name_(std::move(name)), labels_(std::move(labels)), table_(std::move(table)) {
    const int n = static_cast<int>(labels_.size());
    if (n == 0 || static_cast<int>(table_.size()) != n) throw TypeError("group table has the wrong size");
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(table_[a].size()) != n) throw TypeError("group table has the wrong size");
      if (table_[a][a] == a && unit_ < 0) unit_ = a;
    }
    if (unit_ < 0) throw TypeError("group has no identity element");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (table_[a][b] == unit_ && table_[b][a] == unit_) inverse_[a] = b;
    for (int a : inverse_)
      if (a < 0) throw TypeError("group element without inverse");
    twist_ = twist < 0 ? unit_ : twist;
  }

  /// Permutations of {0, 1, 2}, ordered lexicographically.
  static Groupoid s3(bool twisted = false) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<std::vector<int>> table(6, std::vector<int>(6));
    std::vector<json> labels;
    for (int a = 0; a < 6; ++a) {
      labels.push_back(perms[a]);
      for (int b = 0; b < 6; ++b) {
        std::vector<int> ab(3);
        for (int i = 0; i < 3; ++i) ab[i] = perms[b][perms[a][i]];
        table[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), ab) - perms.begin());
      }
    }
    // The 3-cycle 0 -> 1 -> 2 -> 0 is [1, 2, 0], index 3.
    return Groupoid(twisted ? "s3-twisted" : "s3", labels, table, twisted ? 3 : -1);
  }

  static Groupoid cyclic(int n) {
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    std::vector<json> labels;
    for (int a = 0; a < n; ++a) {
      labels.push_back(a);
      for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return Groupoid("z" + std::to_string(n), labels, table);
  }

  std::string name() const { return name_; }
  int order() const { return static_cast<int>(labels_.size()); }
  int twist() const { return twist_; }
  bool twisted() const { return twist_ != unit_; }

  std::vector<Obj> objects() const { return {0}; }
  Mor id(Obj a) const { return {a, a, unit_}; }
  Mor element(int g) const { return {0, 0, g}; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }

  Mor compose(const Mor& f, const Mor& g) const {
    if (f.tgt != g.src) detail::throw_not_composable(*this, f, g);
    return {0, 0, mul(f.payload, g.payload)};
  }

  bool hom_is_finite(Obj, Obj) const { return true; }
  std::uint64_t support_size(Obj, Obj) const { return labels_.size(); }
  Mor support_at(Obj, Obj, std::uint64_t i) const { return element(static_cast<int>(i)); }

  std::optional<Mor> inverse(const Mor& f) const { return element(inv(f.payload)); }

  Obj dag_obj(Obj a) const { return a; }
  Mor dag_mor(const Mor& f) const { return element(mul(mul(inv(twist_), inv(f.payload)), twist_)); }
  Mor iota(Obj) const { return element(mul(twist_, twist_)); }

  json obj_json(Obj a) const { return a; }
  json payload_json(const Payload& p) const { return labels_[p]; }

  Obj parse_obj(const json& j) const {
    if (j != json(0) && j != json("*")) throw TypeError("groupoid has the single object 0, got " + j.dump());
    return 0;
  }

  Mor parse_mor(Obj, Obj, const json& j) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == j) return element(static_cast<int>(i));
    throw TypeError("not an element of " + name_ + ": " + j.dump());
  }

 private:
  std::string name_;
  std::vector<json> labels_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int unit_ = -1;
  int twist_ = 0;
};

}  // namespace ipcat
