#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "antipodal/errors.hpp"
#include "antipodal/rational.hpp"

namespace antipodal {

/// Point or covector in ambient coordinates.
using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

inline Vector zeros(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit(std::size_t n, std::size_t i) {
  Vector v = zeros(n);
  v.at(i) = 1;
  return v;
}

inline void require_same_length(const Vector& u, const Vector& v, const char* what) {
  if (u.size() != v.size()) {
    std::ostringstream msg;
    msg << what << ": length mismatch " << u.size() << " vs " << v.size();
    throw DimensionError(msg.str());
  }
}

/// Standard dot product.
inline Rational inner(const Vector& u, const Vector& v) {
  require_same_length(u, v, "inner");
  Rational s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

inline Vector operator+(const Vector& u, const Vector& v) {
  require_same_length(u, v, "add");
  Vector w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
  return w;
}

inline Vector operator-(const Vector& u, const Vector& v) {
  require_same_length(u, v, "sub");
  Vector w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] - v[i];
  return w;
}

inline Vector operator-(const Vector& u) {
  Vector w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = -u[i];
  return w;
}

inline Vector operator*(const Rational& s, const Vector& u) {
  Vector w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = s * u[i];
  return w;
}

/// w += s * u
inline void axpy(Vector& w, const Rational& s, const Vector& u) {
  require_same_length(w, u, "axpy");
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < u.size(); ++i) w[i] += s * u[i];
}

inline bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline std::string to_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

/// Solves the square system A t = b by Gauss-Jordan elimination.
/// Throws SingularSystemError if A is singular.
inline Vector solve_square(Matrix a, Vector b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionError("solve_square: rhs length mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw DimensionError("solve_square: matrix is not square");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw SingularSystemError("solve_square: singular matrix");
    if (piv != col) {
      std::swap(a[piv], a[col]);
      std::swap(b[piv], b[col]);
    }
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational f = a[row][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  return b;
}

/// Returns the Gram matrix (rows_i . rows_j).
inline Matrix gram(const std::vector<Vector>& rows) {
  const std::size_t n = rows.size();
  Matrix g(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = inner(rows[i], rows[j]);
  return g;
}

/// Finds x in the span of `rows` with rows[i] . x = rhs[i].
///
/// The solution is written as x = sum_k t_k rows[k], which reduces the
/// problem to the Gram system (rows rows^T) t = rhs. The Gram matrix is
/// singular exactly when the rows are dependent.
inline Vector solve_linear(const std::vector<Vector>& rows, const Vector& rhs) {
  if (rows.size() != rhs.size()) throw DimensionError("solve_linear: rows/rhs count mismatch");
  if (rows.empty()) throw DimensionError("solve_linear: empty system");
  for (const auto& r : rows) require_same_length(r, rows.front(), "solve_linear");
  const Vector t = solve_square(gram(rows), rhs);
  Vector x = zeros(rows.front().size());
  for (std::size_t k = 0; k < rows.size(); ++k) axpy(x, t[k], rows[k]);
  return x;
}

}  // namespace antipodal
