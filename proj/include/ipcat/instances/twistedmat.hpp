#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipcat/core/category.hpp"
#include "ipcat/instances/matrix.hpp"

namespace ipcat {

enum class Side { L, R };

struct TwObj {
  std::size_t n = 0;
  Side side = Side::L;

  friend bool operator==(const TwObj&, const TwObj&) = default;
};

/// Gaussian-rational matrices whose objects carry a side. The dagger flips
/// the side and conjugate-transposes, so no object is its own dagger; the
/// involutor is the identity matrix. phi_(n,L) is diag(weights) and
/// phi_(n,R) its inverse.
class TwistedMat {
 public:
  using Obj = TwObj;
  using Payload = Matrix<GaussQ>;
  using Mor = Morphism<Obj, Payload>;

  static std::vector<GaussQ> default_samples() { return {GaussQ(-1), GaussQ(0), GaussQ(1), GaussQ::i()}; }

  explicit TwistedMat(std::size_t bound, std::vector<GaussQ> samples = default_samples(),
                      std::vector<mpq_class> weights = {})
      : bound_(bound), samples_(std::move(samples)), weights_(std::move(weights)) {
    if (bound > 4) throw TypeError("twistedmat bound must be at most 4");
    if (samples_.empty()) throw TypeError("twistedmat sample set is empty");
    if (weights_.empty()) weights_.assign(bound, mpq_class(1));
    if (weights_.size() < bound) throw TypeError("twistedmat needs one weight per dimension");
    for (const auto& w : weights_)
      if (w == 0) throw TypeError("twistedmat weights must be nonzero");
  }

  std::string name() const { return "twistedmat(" + std::to_string(bound_) + ")"; }
  const std::vector<mpq_class>& weights() const { return weights_; }
  const std::vector<GaussQ>& samples() const { return samples_; }

  std::vector<Obj> objects() const {
    std::vector<Obj> out;
    for (std::size_t n = 0; n <= bound_; ++n) {
      out.push_back({n, Side::L});
      out.push_back({n, Side::R});
    }
    return out;
  }

  Mor id(const Obj& a) const { return {a, a, Matrix<GaussQ>::identity(a.n)}; }

  Mor compose(const Mor& f, const Mor& g) const {
    if (f.tgt != g.src) detail::throw_not_composable(*this, f, g);
    return {f.src, g.tgt, f.payload * g.payload};
  }

  bool hom_is_finite(const Obj& a, const Obj& b) const { return a.n * b.n == 0; }
  std::uint64_t support_size(const Obj& a, const Obj& b) const { return detail::ipow(samples_.size(), a.n * b.n); }
  Mor support_at(const Obj& a, const Obj& b, std::uint64_t i) const {
    return {a, b, detail::matrix_at(a.n, b.n, samples_, i)};
  }

  std::optional<Mor> inverse(const Mor& f) const {
    auto m = invert(f.payload);
    if (!m) return std::nullopt;
    return Mor{f.tgt, f.src, std::move(*m)};
  }

  static Side flip(Side s) { return s == Side::L ? Side::R : Side::L; }

  Obj dag_obj(const Obj& a) const { return {a.n, flip(a.side)}; }
  Mor dag_mor(const Mor& f) const { return {dag_obj(f.tgt), dag_obj(f.src), f.payload.conj_transpose()}; }
  Mor iota(const Obj& a) const { return id(a); }

  Mor phi(const Obj& a) const {
    Matrix<GaussQ> m(a.n, a.n);
    for (std::size_t i = 0; i < a.n; ++i) {
      const mpq_class w = a.side == Side::L ? weights_[i] : mpq_class(1 / weights_[i]);
      m.at(i, i) = GaussQ(w);
    }
    return {a, dag_obj(a), m};
  }

  json obj_json(const Obj& a) const { return json::array({a.n, a.side == Side::L ? "L" : "R"}); }
  json payload_json(const Payload& p) const { return p.to_json(); }

  Obj parse_obj(const json& j) const {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_string())
      throw TypeError("twistedmat object must be [n, \"L\" | \"R\"], got " + j.dump());
    const long n = j[0].get<long>();
    const auto s = j[1].get<std::string>();
    if (n < 0 || static_cast<std::size_t>(n) > bound_ || (s != "L" && s != "R"))
      throw TypeError("twistedmat object out of range: " + j.dump());
    return {static_cast<std::size_t>(n), s == "L" ? Side::L : Side::R};
  }

  Mor parse_mor(const Obj& a, const Obj& b, const json& j) const {
    return {a, b, Matrix<GaussQ>::from_json(a.n, b.n, j)};
  }

 private:
  std::size_t bound_;
  std::vector<GaussQ> samples_;
  std::vector<mpq_class> weights_;
};

}  // namespace ipcat
