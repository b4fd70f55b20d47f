#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ipc/code.hpp"
#include "ipc/piercing.hpp"

namespace ipc {

struct Ball {
  Eigen::VectorXd center;
  double radius = 0;
};

/// The sphere ∩ ∂B_i as a round sphere inside an affine plane:
/// {center + radius·basis·u : |u| = 1}. basis has orthonormal columns.
struct SphereIntersection {
  Eigen::VectorXd center;
  double radius = 0;
  Eigen::MatrixXd basis;

  int sphere_dim() const { return static_cast<int>(basis.cols()) - 1; }
};

/// Radical-hyperplane solve. nullopt when the spheres do not meet in a
/// sphere of dimension >= 0.
std::optional<SphereIntersection> intersect_spheres(const std::vector<Ball>& balls);

struct BallStep {
  Eigen::VectorXd p;
  double radius = 0;
  int sphere_dim = -1;  // -1 when lambda is empty
  double room = 0;      // score of the chosen p
};

using FloatWitnesses = std::map<Codeword, Eigen::VectorXd, CodewordLess>;

struct BallRealization {
  int dim = 0;
  std::vector<Ball> balls;  // neuron i is balls[i-1]
  FloatWitnesses witnesses;
  double tolerance = 1e-9;
  std::vector<BallStep> trace;
};

struct BallOptions {
  /// 0 picks max(1, k + 1).
  int dim = 0;
  double tolerance = 1e-9;
  /// Candidate points sampled on each sphere intersection.
  unsigned directions = 2048;
  std::uint64_t seed = 0x1d5eedULL;
};

/// Builds open balls realizing replay(seq). Throws NumericFailure if a
/// piercing point with enough room cannot be found.
BallRealization build_ball_realization(const PiercingSequence& seq, const BallOptions& options = {});

/// Codeword of x (strict containment) and the distance to the nearest sphere.
Codeword classify(const BallRealization& r, const Eigen::VectorXd& x, double* margin = nullptr);

struct BallVerification {
  bool witnesses_ok = false;
  double witness_margin = 0;
  std::string witness_failure;
  std::optional<Codeword> witness_offending;

  // Quasi-random sampling of the bounding box; probabilistic evidence only.
  bool sampling_ok = false;
  std::size_t samples = 0;
  std::size_t extra_points = 0;
  std::optional<Codeword> extra_codeword;
  std::size_t codewords_hit = 0;

  bool ok() const { return witnesses_ok && sampling_ok; }
};

BallVerification verify_ball_realization(const BallRealization& r, const NeuralCode& expected,
                                         std::size_t samples, std::uint64_t seed = 0x1d5eedULL);

/// Circles and witness dots for 2-D realizations. Throws InvalidInput otherwise.
std::string to_svg(const BallRealization& r);

}  // namespace ipc
