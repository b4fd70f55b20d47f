#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "ipc/code.hpp"
#include "ipc/groebner.hpp"
#include "ipc/monomial.hpp"

namespace ipc {

/// How codeword variables are printed: y_{012} (digits) or y_{00011}
/// (one bit per neuron 1..n, then the dummy neuron 0 when present).
enum class VariableNaming { digits, bits };

/// The kernel of y_c ↦ ∏_{i∈c} x_i on the codeword ring k[y_c : c ∈ C \ {∅}].
///
/// Variables are the nonempty codewords in increasing codeword order, so
/// variable index v is the v-th smallest codeword. Generators are computed on
/// construction by elimination; bases for other orders are cached per order.
class ToricIdeal {
 public:
  explicit ToricIdeal(NeuralCode code, BuchbergerLimits limits = {});

  const NeuralCode& code() const { return code_; }
  const std::vector<Codeword>& variables() const { return vars_; }
  std::size_t variable_count() const { return vars_.size(); }
  /// Throws InvalidInput for ∅ or a codeword not in the code.
  std::size_t variable_index(Codeword c) const;

  /// ∏ y_c over the listed codewords (repeats multiply).
  Monomial monomial(std::initializer_list<Codeword> factors) const;
  Monomial monomial(std::span<const Codeword> factors) const;

  /// Image in the neuron ring k[x_0, x_1, ..., x_n]; index i is x_i.
  Monomial image(const Monomial& y) const;

  /// Generating set of the kernel (a Gröbner basis for codeword_lex()).
  const std::vector<Binomial>& generators() const { return generators_; }

  /// Reduced Gröbner basis, cached per order.
  const std::vector<Binomial>& groebner_basis(const MonomialOrder& order) const;

  /// The lex order with y_c ≺ y_d iff c < d.
  MonomialOrder codeword_lex() const;
  /// Lex from an explicit listing: `ascending` runs from the smallest
  /// variable to the largest. Must list every variable exactly once.
  MonomialOrder lex_from_listing(std::span<const Codeword> ascending) const;
  /// Weighted graded reverse lex with one weight per nonempty subset of
  /// {1..n} in the order of grevlex_listing(n); absent codewords are skipped.
  MonomialOrder weighted_grevlex(std::span<const std::int64_t> weights) const;

  std::string format(const Monomial& m, VariableNaming naming = VariableNaming::digits) const;
  std::string format(const Binomial& b, VariableNaming naming = VariableNaming::digits) const;

  const BuchbergerLimits& limits() const { return limits_; }

 private:
  NeuralCode code_;
  BuchbergerLimits limits_;
  std::vector<Codeword> vars_;
  std::vector<Binomial> generators_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::string, std::vector<Binomial>> cache_;
};

/// Nonempty subsets of {1..n} ordered by size, then lexicographically:
/// 1, 2, 3, 12, 13, 23, 123 for n = 3.
std::vector<Codeword> grevlex_listing(int n);

/// y-monomial ↦ x-monomial. Throws InvalidInput if the exponent vector does
/// not match the ideal's variables.
Monomial monomial_map_image(const ToricIdeal& ideal, const Monomial& y);

/// Generators of ker φ_C: Buchberger on ⟨y_c - x^c⟩ under an elimination
/// order with x ≻ y and codeword lex inside, intersected with the y ring.
std::vector<Binomial> toric_generators(const NeuralCode& code, const BuchbergerLimits& limits = {});

std::vector<Binomial> reduced_groebner_basis(const ToricIdeal& ideal, const MonomialOrder& order);

/// Max total degree over the reduced basis; 0 for the zero ideal.
int gb_max_degree(const ToricIdeal& ideal, const MonomialOrder& order);

/// Normal form membership. The zero binomial (lead == trail) is always in.
bool ideal_contains(const ToricIdeal& ideal, const Binomial& b, const MonomialOrder& order);
bool ideal_contains(const ToricIdeal& ideal, const Monomial& a, const Monomial& b,
                    const MonomialOrder& order);

/// Every generator of T_sub lies in T_sup. Throws InvalidInput unless
/// sub ⊆ sup as codeword sets.
bool check_nesting(const NeuralCode& sub, const NeuralCode& sup, const BuchbergerLimits& limits = {});

/// Adds neuron 0 to every codeword (∅ becomes {0}).
NeuralCode homogenize_with_dummy(const NeuralCode& code);

}  // namespace ipc
