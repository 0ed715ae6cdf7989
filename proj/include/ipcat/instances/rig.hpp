#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "ipcat/core/errors.hpp"

namespace ipcat {

using json = nlohmann::json;

/// The boolean rig: + is "or", * is "and". Conjugation is the identity.
struct Boolean {
  bool value = false;

  friend bool operator==(Boolean, Boolean) = default;
  friend Boolean operator+(Boolean a, Boolean b) { return {a.value || b.value}; }
  friend Boolean operator*(Boolean a, Boolean b) { return {a.value && b.value}; }
};

/// Gaussian rationals a + bi with exact rational parts.
struct GaussQ {
  mpq_class re{0};
  mpq_class im{0};

  GaussQ() = default;
  GaussQ(mpq_class r, mpq_class i = 0) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  GaussQ(long r) : re(r), im(0) {}

  static GaussQ i() { return GaussQ(0, 1); }

  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
  friend GaussQ operator+(const GaussQ& a, const GaussQ& b) { return GaussQ(a.re + b.re, a.im + b.im); }
  friend GaussQ operator-(const GaussQ& a, const GaussQ& b) { return GaussQ(a.re - b.re, a.im - b.im); }
  friend GaussQ operator-(const GaussQ& a) { return GaussQ(-a.re, -a.im); }
  friend GaussQ operator*(const GaussQ& a, const GaussQ& b) {
    return GaussQ(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }

  bool is_zero() const { return re == 0 && im == 0; }

  GaussQ conj() const { return GaussQ(re, -im); }

  GaussQ reciprocal() const {
    const mpq_class n = re * re + im * im;
    if (n == 0) throw NotInvertible("division by zero in Gaussian rationals");
    return GaussQ(re / n, -im / n);
  }

  friend GaussQ operator/(const GaussQ& a, const GaussQ& b) { return a * b.reciprocal(); }
};

namespace detail {

inline json rational_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

inline mpq_class rational_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (j.is_string()) {
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw TypeError("bad rational: " + j.dump());
    if (q.get_den() == 0) throw TypeError("bad rational: " + j.dump());
    q.canonicalize();
    return q;
  }
  throw TypeError("expected an integer or a \"p/q\" string, got " + j.dump());
}

}  // namespace detail

/// Per-rig data used by the matrix instances: identity, conjugation, the
/// fixed sample set entries are drawn from, (de)serialisation, and matrix
/// inversion where the rig supports it.
template <class T>
struct RigTraits;

template <>
struct RigTraits<Boolean> {
  static constexpr const char* name = "bool";
  static constexpr bool finite = true;
  static Boolean zero() { return {false}; }
  static Boolean one() { return {true}; }
  static Boolean conj(Boolean x) { return x; }
  static std::vector<Boolean> samples() { return {{false}, {true}}; }
  static json to_json(Boolean x) { return x.value ? 1 : 0; }
  static Boolean from_json(const json& j) {
    if (j.is_boolean()) return {j.get<bool>()};
    if (j.is_number_integer() && (j.get<long>() == 0 || j.get<long>() == 1)) return {j.get<long>() == 1};
    throw TypeError("expected a boolean entry, got " + j.dump());
  }
};

template <>
struct RigTraits<mpz_class> {
  static constexpr const char* name = "int";
  static constexpr bool finite = false;
  static mpz_class zero() { return 0; }
  static mpz_class one() { return 1; }
  static mpz_class conj(const mpz_class& x) { return x; }
  static std::vector<mpz_class> samples() { return {0, 1, -1, 2, -2, 3, -3, 5}; }
  static json to_json(const mpz_class& x) {
    if (x.fits_slong_p()) return x.get_si();
    return x.get_str();
  }
  static mpz_class from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(j.get<long>());
    if (j.is_string()) return mpz_class(j.get<std::string>());
    throw TypeError("expected an integer entry, got " + j.dump());
  }
};

template <>
struct RigTraits<GaussQ> {
  static constexpr const char* name = "gauss";
  static constexpr bool finite = false;
  static GaussQ zero() { return GaussQ(0); }
  static GaussQ one() { return GaussQ(1); }
  static GaussQ conj(const GaussQ& x) { return x.conj(); }
  static std::vector<GaussQ> samples() {
    return {GaussQ(0), GaussQ(1), GaussQ(-1), GaussQ(2), GaussQ::i(), -GaussQ::i(), GaussQ(1, 1), GaussQ(mpq_class(1, 2))};
  }
  /// A real number prints as a rational; otherwise as [re, im].
  static json to_json(const GaussQ& x) {
    if (x.im == 0) return detail::rational_json(x.re);
    return json::array({detail::rational_json(x.re), detail::rational_json(x.im)});
  }
  static GaussQ from_json(const json& j) {
    if (j.is_array()) {
      if (j.size() != 2) throw TypeError("expected [re, im], got " + j.dump());
      return GaussQ(detail::rational_from_json(j[0]), detail::rational_from_json(j[1]));
    }
    return GaussQ(detail::rational_from_json(j));
  }
};

}  // namespace ipcat
