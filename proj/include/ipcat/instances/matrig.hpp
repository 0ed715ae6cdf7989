#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ipcat/core/category.hpp"
#include "ipcat/instances/matrix.hpp"

namespace ipcat {

/// Matrices over a rig with conjugation. Objects are sizes 0..bound, an
/// r x c matrix is a map r -> c, composition is the matrix product and the
/// dagger is the conjugate transpose.
///
/// Over an infinite rig the support of hom(a, b) is the set of matrices with
/// entries drawn from the rig's sample set (or the samples given here).
template <class T>
class MatRig {
 public:
  using Obj = std::size_t;
  using Payload = Matrix<T>;
  using Mor = Morphism<Obj, Payload>;

  explicit MatRig(std::size_t bound, std::vector<T> samples = RigTraits<T>::samples())
      : bound_(bound), samples_(std::move(samples)) {
    if (bound > 4) throw TypeError("matrix bound must be at most 4");
    if (samples_.empty()) throw TypeError("matrix sample set is empty");
  }

  std::string name() const { return std::string("mat-") + RigTraits<T>::name + "(" + std::to_string(bound_) + ")"; }
  std::size_t bound() const { return bound_; }
  const std::vector<T>& samples() const { return samples_; }

  std::vector<Obj> objects() const {
    std::vector<Obj> out;
    for (std::size_t n = 0; n <= bound_; ++n) out.push_back(n);
    return out;
  }

  Mor id(Obj a) const { return {a, a, Matrix<T>::identity(a)}; }

  Mor compose(const Mor& f, const Mor& g) const {
    if (f.tgt != g.src) detail::throw_not_composable(*this, f, g);
    return {f.src, g.tgt, f.payload * g.payload};
  }

  bool hom_is_finite(Obj a, Obj b) const { return RigTraits<T>::finite || a * b == 0; }
  std::uint64_t support_size(Obj a, Obj b) const { return detail::ipow(samples_.size(), a * b); }
  Mor support_at(Obj a, Obj b, std::uint64_t i) const { return {a, b, detail::matrix_at(a, b, samples_, i)}; }

  std::optional<Mor> inverse(const Mor& f) const {
    auto m = invert(f.payload);
    if (!m) return std::nullopt;
    return Mor{f.tgt, f.src, std::move(*m)};
  }

  Obj dag_obj(Obj a) const { return a; }
  Mor dag_mor(const Mor& f) const { return {f.tgt, f.src, f.payload.conj_transpose()}; }
  Mor iota(Obj a) const { return id(a); }

  Mor scalar(Obj a, const T& s) const { return {a, a, Matrix<T>::scalar(a, s)}; }

  json obj_json(Obj a) const { return a; }
  json payload_json(const Payload& p) const { return p.to_json(); }

  Obj parse_obj(const json& j) const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long>() >= 0))
      throw TypeError("matrix object must be a natural number, got " + j.dump());
    const auto n = j.get<std::size_t>();
    if (n > bound_) throw TypeError("matrix object " + j.dump() + " out of range");
    return n;
  }

  Mor parse_mor(Obj a, Obj b, const json& j) const { return {a, b, Matrix<T>::from_json(a, b, j)}; }

 private:
  std::size_t bound_;
  std::vector<T> samples_;
};

}  // namespace ipcat
