#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ipc/code.hpp"
#include "ipc/piercing.hpp"
#include "ipc/rational.hpp"

namespace ipc {

/// U = {x : normal·x > offset} when `upper`, else {x : normal·x < offset}.
struct Halfspace {
  RVector normal;
  Rational offset;
  bool upper = true;

  /// Positive exactly on the open side U.
  Rational signed_slack(const RVector& x) const;
};

/// One construction step: the interior point p, its perturbation p', the
/// lifted apex (p', 1), the scale factor a and the cutting height 1 - a.
struct HyperplaneStep {
  RVector p;
  RVector p_prime;
  RVector apex;
  Rational a;
  Rational height;
};

using RationalWitnesses = std::map<Codeword, RVector, CodewordLess>;

/// Half-spaces inside a bounding simplex; neuron i is halfspaces[i-1].
struct HyperplaneRealization {
  int dim = 0;
  std::vector<Halfspace> halfspaces;
  std::vector<RVector> bound;  // simplex vertices
  RationalWitnesses witnesses;
  std::vector<HyperplaneStep> trace;
};

struct HyperplaneOptions {
  /// Extra halvings of the scale factor a after the largest valid one is found.
  unsigned extra_halvings = 0;
};

/// Builds an n-dimensional realization of replay(seq), neuron labels as in
/// the sequence's construction order. Throws NumericFailure if an internal
/// step cannot be completed (this signals a bug, not bad input).
HyperplaneRealization build_hyperplane_realization(const PiercingSequence& seq,
                                                   const HyperplaneOptions& options = {});

/// The codeword of x, or nullopt if x lies on a hyperplane.
std::optional<Codeword> classify(const HyperplaneRealization& r, const RVector& x);

/// Barycentric coordinates of x in the bounding simplex (nullopt if the
/// bound is not a full-dimensional simplex).
std::optional<RVector> barycentric(const HyperplaneRealization& r, const RVector& x);

bool bound_is_simplex(const HyperplaneRealization& r);

enum class FeasibilityMethod { lp, fourier_motzkin, both };

struct HyperplaneVerification {
  bool ok = false;
  std::string reason;
  /// Offending sign vector (as a codeword) or witness key.
  std::optional<Codeword> offending;
  std::size_t regions_checked = 0;
};

/// Exact check that the nonempty open regions are exactly `expected`, and
/// that every stored witness certifies its own codeword.
HyperplaneVerification verify_hyperplane_realization(
    const HyperplaneRealization& r, const NeuralCode& expected,
    FeasibilityMethod method = FeasibilityMethod::lp);

/// min over witnesses and constraints of slack / ‖gradient‖_∞, where the
/// constraints are the hyperplanes and the facets of the bound.
Rational nondegeneracy_margin(const HyperplaneRealization& r);

}  // namespace ipc
