#include "ipc/rational.hpp"

#include <cassert>

#include "ipc/errors.hpp"

namespace ipc {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  Rational q;
  if (text.empty() || q.set_str(std::string(text), 10) != 0 || q.get_den() == 0)
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Rational inverse_power_of_two(unsigned t) {
  mpz_class den = 1;
  den <<= t;
  return Rational(mpz_class(1), den);
}

Rational dot(const RVector& a, const RVector& b) {
  assert(a.size() == b.size());
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

RVector operator+(const RVector& a, const RVector& b) {
  RVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

RVector operator-(const RVector& a, const RVector& b) {
  RVector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

RVector operator*(const Rational& s, const RVector& v) {
  RVector r(v);
  for (auto& x : r) x *= s;
  return r;
}

Rational max_abs(const RVector& v) {
  Rational m = 0;
  for (const auto& x : v)
    if (abs(x) > m) m = abs(x);
  return m;
}

std::optional<RMatrix> inverse(const RMatrix& m) {
  const std::size_t n = m.size();
  RMatrix a(n, RVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw InvalidInput("inverse: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a[piv][col]) == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    Rational inv = 1 / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < 2 * n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  RMatrix out(n, RVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  return out;
}

std::optional<RVector> solve(const RMatrix& a, const RVector& b, std::size_t columns) {
  const std::size_t rows = a.size();
  RMatrix m(rows, RVector(columns + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < columns; ++j) m[i][j] = a[i][j];
    m[i][columns] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && sgn(m[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rational inv = 1 / m[r][col];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][col]) == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j <= columns; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(m[i][columns]) != 0) return std::nullopt;
  RVector x(columns, Rational(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][columns];
  return x;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace ipc
