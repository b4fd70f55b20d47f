#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ipc {

/// Exponent vector over a fixed, declared list of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t variables) : exps_(variables, 0) {}
  explicit Monomial(std::vector<int> exps);

  /// x_v in a ring with `variables` variables.
  static Monomial variable(std::size_t variables, std::size_t v, int power = 1);

  std::size_t variables() const { return exps_.size(); }
  int operator[](std::size_t v) const { return exps_[v]; }
  std::span<const int> exponents() const { return exps_; }

  int degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires other | *this.
  Monomial operator/(const Monomial& other) const;

  /// Keeps the first `n` variables (the rest must be zero).
  Monomial truncated(std::size_t n) const;
  /// Pads with zero exponents up to `n` variables.
  Monomial widened(std::size_t n) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Storage order for containers, not a term order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
};

/// lead - trail with lead ≻ trail in the order it was built under.
struct Binomial {
  Monomial lead;
  Monomial trail;

  int degree() const { return std::max(lead.degree(), trail.degree()); }
  bool homogeneous() const { return lead.degree() == trail.degree(); }

  friend bool operator==(const Binomial&, const Binomial&) = default;
  friend auto operator<=>(const Binomial&, const Binomial&) = default;
};

/// A term order on monomials with a fixed variable count.
///
/// lex: `significance` lists variables from most to least significant.
/// weighted_grevlex: compare w·a, then total degree, then reverse
///   lexicographically along `sequence` (the variable appearing last in
///   `sequence` is inspected first; a smaller exponent there wins).
/// elimination: variables in `block` dominate (graded reverse lex within the
///   block); ties fall through to `inner`.
class MonomialOrder {
 public:
  enum class Kind { lex, weighted_grevlex, elimination };

  static MonomialOrder lex(std::vector<std::size_t> significance);
  static MonomialOrder weighted_grevlex(std::vector<std::int64_t> weights,
                                       std::vector<std::size_t> sequence);
  static MonomialOrder elimination(std::vector<std::size_t> block, MonomialOrder inner);

  Kind kind() const { return kind_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Stable textual key, also used to cache bases.
  std::string describe() const;

  const std::vector<std::size_t>& sequence() const { return sequence_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }

 private:
  MonomialOrder() = default;

  Kind kind_ = Kind::lex;
  std::vector<std::size_t> sequence_;  // significance (lex), tie-break sequence (grevlex), block (elimination)
  std::vector<std::int64_t> weights_;
  std::shared_ptr<const MonomialOrder> inner_;
};

}  // namespace ipc
