#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ipcat/core/category.hpp"

namespace ipcat {

/// The poset {-k..k} as a category, one morphism m -> n when m <= n, with
/// dagger n |-> -n. It is involutive but has no unitary structure: there is
/// no map n -> -n for n > 0.
class FinOrdRev {
 public:
  using Obj = int;
  using Payload = std::monostate;
  using Mor = Morphism<Obj, Payload>;

  explicit FinOrdRev(int k) : k_(k) {
    if (k < 0 || k > 16) throw TypeError("finordrev k must be between 0 and 16");
  }

  std::string name() const { return "finordrev(" + std::to_string(k_) + ")"; }

  std::vector<Obj> objects() const {
    std::vector<Obj> out;
    for (int n = -k_; n <= k_; ++n) out.push_back(n);
    return out;
  }

  Mor id(Obj a) const { return {a, a, {}}; }

  Mor compose(const Mor& f, const Mor& g) const {
    if (f.tgt != g.src) detail::throw_not_composable(*this, f, g);
    return {f.src, g.tgt, {}};
  }

  bool hom_is_finite(Obj, Obj) const { return true; }
  std::uint64_t support_size(Obj a, Obj b) const { return a <= b ? 1 : 0; }
  Mor support_at(Obj a, Obj b, std::uint64_t) const {
    if (a > b) throw TypeError("no morphism " + std::to_string(a) + " -> " + std::to_string(b));
    return {a, b, {}};
  }

  std::optional<Mor> inverse(const Mor& f) const {
    if (f.src != f.tgt) return std::nullopt;
    return f;
  }

  Obj dag_obj(Obj a) const { return -a; }
  Mor dag_mor(const Mor& f) const { return {-f.tgt, -f.src, {}}; }
  Mor iota(Obj a) const { return id(a); }

  json obj_json(Obj a) const { return a; }
  json payload_json(const Payload&) const { return nullptr; }

  Obj parse_obj(const json& j) const {
    if (!j.is_number_integer()) throw TypeError("finordrev object must be an integer, got " + j.dump());
    const int n = j.get<int>();
    if (n < -k_ || n > k_) throw TypeError("finordrev object " + j.dump() + " out of range");
    return n;
  }

  Mor parse_mor(Obj a, Obj b, const json&) const {
    if (a > b) throw TypeError("no morphism " + std::to_string(a) + " -> " + std::to_string(b));
    return {a, b, {}};
  }

 private:
  int k_;
};

}  // namespace ipcat
