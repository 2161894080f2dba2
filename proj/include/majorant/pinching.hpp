#pragma once

// Desk model of a II₁ factor: M_n with normalized trace, with the diagonal
// algebra as the MASA and E the pinching onto it. Step functions on [0, 1)
// model self-adjoint elements of L^∞[0, 1].
//
// Still open, and not attempted here: whether E(O_A) contains every B in the
// MASA with m_B ⪯ m_A in a genuine II₁ factor.

#include <cstddef>
#include <vector>

#include "majorant/convex.hpp"
#include "majorant/hermitian.hpp"
#include "majorant/measure.hpp"

namespace majorant {

/// E(A) = diag(a_11, ..., a_nn).
HermitianMatrix pinch_diag(const HermitianMatrix& a);

/// A₊ = A P₊ with P₊ the spectral projection for (0, ∞).
HermitianMatrix positive_part(const HermitianMatrix& a);

inline constexpr double kPsdSlack = 1e-9;

struct PinchCheck {
  bool holds = false;
  /// Minimum eigenvalue of E(f(A)) - f(E(A)).
  double witness = 0.0;
};

/// Tests f(E(A)) <= E(f(A)) for convex f. Both sides are diagonal, so the
/// minimum eigenvalue of the difference is its smallest diagonal entry.
/// Throws InvalidInput if σ(A) or diag(A) leaves the domain of f.
PinchCheck convex_pinch_check(const HermitianMatrix& a, const ConvexFunction& f);

/// m_{E(A)} ⪯ m_A with the hinge method. Always true by the Schur theorem for
/// II₁ factors.
bool schur_distribution_check(const HermitianMatrix& a);

struct Alignment {
  /// permutation[k] is the cell of f matched with cell k of g.
  std::vector<std::size_t> permutation;
  /// max_k |f(permutation[k]) - g(k)|.
  double achieved = 0.0;
};

/// Measure-preserving cell permutation bringing f within 2ε of g. Sorts both
/// (ties by index) and matches rank to rank. Throws DistributionMismatch when
/// the sorted values differ by more than ε, InvalidInput on a cell-count mismatch.
Alignment align_step_functions(const StepFunction& f, const StepFunction& g, double eps);

}  // namespace majorant
