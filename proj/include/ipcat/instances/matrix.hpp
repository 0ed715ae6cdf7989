#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ipcat/instances/rig.hpp"

namespace ipcat {

/// Dense rows x cols matrix. A matrix with n rows and m columns is a morphism
/// n -> m, so diagrammatic composition f;g is the ordinary product F*G.
template <class T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, RigTraits<T>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RigTraits<T>::one();
    return m;
  }

  static Matrix scalar(std::size_t n, const T& s) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = s;
    return m;
  }

  T& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) throw TypeError("matrix product of incompatible shapes");
    Matrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t k = 0; k < a.cols; ++k) {
        const T& aik = a.at(i, k);
        for (std::size_t j = 0; j < b.cols; ++j) out.at(i, j) = out.at(i, j) + aik * b.at(k, j);
      }
    return out;
  }

  Matrix conj_transpose() const {
    Matrix out(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out.at(j, i) = RigTraits<T>::conj(at(i, j));
    return out;
  }

  json to_json() const {
    json j = json::array();
    for (std::size_t i = 0; i < rows; ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < cols; ++k) row.push_back(RigTraits<T>::to_json(at(i, k)));
      j.push_back(std::move(row));
    }
    return j;
  }

  static Matrix from_json(std::size_t r, std::size_t c, const json& j) {
    if (!j.is_array() || j.size() != r) throw TypeError("expected a matrix with " + std::to_string(r) + " rows, got " + j.dump());
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (!j[i].is_array() || j[i].size() != c)
        throw TypeError("expected " + std::to_string(c) + " columns in row " + std::to_string(i) + ", got " + j[i].dump());
      for (std::size_t k = 0; k < c; ++k) m.at(i, k) = RigTraits<T>::from_json(j[i][k]);
    }
    return m;
  }
};

namespace detail {

inline std::uint64_t ipow(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

/// idx-th matrix (mixed radix, first entry least significant) over `samples`.
template <class T>
Matrix<T> matrix_at(std::size_t rows, std::size_t cols, const std::vector<T>& samples, std::uint64_t idx) {
  Matrix<T> m(rows, cols);
  const std::uint64_t base = samples.size();
  for (auto& e : m.data) {
    e = samples[idx % base];
    idx /= base;
  }
  return m;
}

/// Gauss-Jordan inversion over a field.
inline std::optional<Matrix<GaussQ>> invert_field(Matrix<GaussQ> a) {
  if (a.rows != a.cols) return std::nullopt;
  const std::size_t n = a.rows;
  Matrix<GaussQ> inv = Matrix<GaussQ>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(a.at(piv, k), a.at(col, k));
        std::swap(inv.at(piv, k), inv.at(col, k));
      }
    }
    const GaussQ r = a.at(col, col).reciprocal();
    for (std::size_t k = 0; k < n; ++k) {
      a.at(col, k) = a.at(col, k) * r;
      inv.at(col, k) = inv.at(col, k) * r;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a.at(row, col).is_zero()) continue;
      const GaussQ f = a.at(row, col);
      for (std::size_t k = 0; k < n; ++k) {
        a.at(row, k) = a.at(row, k) - f * a.at(col, k);
        inv.at(row, k) = inv.at(row, k) - f * inv.at(col, k);
      }
    }
  }
  return inv;
}

}  // namespace detail

inline std::optional<Matrix<GaussQ>> invert(const Matrix<GaussQ>& m) { return detail::invert_field(m); }

/// Over the integers: invert over the rationals and keep integral results.
inline std::optional<Matrix<mpz_class>> invert(const Matrix<mpz_class>& m) {
  Matrix<GaussQ> q(m.rows, m.cols);
  for (std::size_t i = 0; i < m.data.size(); ++i) q.data[i] = GaussQ(mpq_class(m.data[i]));
  auto qi = detail::invert_field(q);
  if (!qi) return std::nullopt;
  Matrix<mpz_class> out(m.rows, m.cols);
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    const GaussQ& e = qi->data[i];
    if (e.im != 0 || e.re.get_den() != 1) return std::nullopt;
    out.data[i] = e.re.get_num();
  }
  return out;
}

/// Over the booleans the invertible matrices are the permutation matrices,
/// with the transpose as inverse.
inline std::optional<Matrix<Boolean>> invert(const Matrix<Boolean>& m) {
  if (m.rows != m.cols) return std::nullopt;
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::size_t row_ones = 0, col_ones = 0;
    for (std::size_t j = 0; j < m.cols; ++j) {
      row_ones += m.at(i, j).value;
      col_ones += m.at(j, i).value;
    }
    if (row_ones != 1 || col_ones != 1) return std::nullopt;
  }
  return m.conj_transpose();
}

}  // namespace ipcat
