#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ipc {

using Rational = mpq_class;
using RVector = std::vector<Rational>;
using RMatrix = std::vector<RVector>;

/// "3/7", "-2", "0".
std::string to_string(const Rational& q);
/// Accepts "p/q" or an integer. Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// 2^-t.
Rational inverse_power_of_two(unsigned t);

Rational dot(const RVector& a, const RVector& b);
RVector operator+(const RVector& a, const RVector& b);
RVector operator-(const RVector& a, const RVector& b);
RVector operator*(const Rational& s, const RVector& v);
Rational max_abs(const RVector& v);

/// Inverse of a square matrix by Gauss–Jordan; nullopt when singular.
std::optional<RMatrix> inverse(const RMatrix& m);

/// Some solution of A x = b (free variables set to 0); nullopt if none.
std::optional<RVector> solve(const RMatrix& a, const RVector& b, std::size_t columns);

double to_double(const Rational& q);

}  // namespace ipc
