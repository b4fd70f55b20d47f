#pragma once

#include <string>
#include <vector>

#include "ipc/code.hpp"

namespace ipc {

/// ∏_{i∈on} x_i ∏_{j∈off} (1 - x_j) over F2, with on ∩ off = ∅.
struct PseudoMonomial {
  Codeword on;
  Codeword off;

  int degree() const { return on.size() + off.size(); }
  /// 1: off empty, 3: on empty, 2: both present.
  int type() const;
  /// Componentwise containment of (on, off): this divides `other`.
  bool divides(const PseudoMonomial& other) const {
    return on.subset_of(other.on) && off.subset_of(other.off);
  }
  /// "x1*x2*(1-x3)".
  std::string to_string() const;

  friend bool operator==(const PseudoMonomial&, const PseudoMonomial&) = default;
};

/// Degree, then on-set, then off-set (bit-pattern order).
bool canonical_less(const PseudoMonomial& a, const PseudoMonomial& b);

/// True iff no codeword c has on ⊆ c and off ∩ c = ∅.
bool vanishes_on(const PseudoMonomial& pm, const NeuralCode& code);

using CanonicalForm = std::vector<PseudoMonomial>;

/// Divisibility-minimal pseudo-monomials of the neural ideal, found by
/// enumerating all 3^n disjoint (on, off) pairs. Throws InvalidInput for the
/// empty code.
CanonicalForm canonical_form(const NeuralCode& code);

/// Max degree over the canonical form; 0 when it is empty.
int cf_max_degree(const NeuralCode& code);

/// Closure of the code under pairwise intersection.
bool intersection_complete_direct(const NeuralCode& code);
/// Every Type 2 element of the canonical form has |off| <= 1.
bool intersection_complete_by_cf(const NeuralCode& code);

/// Runs both checks; throws std::logic_error if they disagree.
bool is_intersection_complete(const NeuralCode& code);

}  // namespace ipc
