#pragma once

#include <cstddef>
#include <optional>

#include "ipc/rational.hpp"

namespace ipc {

/// maximize objective·x  subject to  a_ub x <= b_ub,  a_eq x = b_eq,  x free.
struct LinearProgram {
  std::size_t variables = 0;
  RMatrix a_ub;
  RVector b_ub;
  RMatrix a_eq;
  RVector b_eq;
  RVector objective;
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  RVector x;
  Rational value;
};

/// Exact two-phase simplex with Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

/// Open polyhedron {x : a x < b}.
struct StrictSystem {
  std::size_t variables = 0;
  RMatrix a;
  RVector b;

  void add(RVector row, Rational rhs) {
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  }
};

/// Maximizes t subject to a x + t <= b, t <= 1. Returns a point of the open
/// polyhedron when the optimum is positive.
std::optional<RVector> strictly_feasible_point(const StrictSystem& sys);

/// Fourier–Motzkin elimination of every variable. Exact, exponential in the
/// worst case; meant for small systems.
bool strictly_feasible_fm(const StrictSystem& sys);

}  // namespace ipc
