#pragma once

// Finite-truncation versions of the diagonal theorems for positive trace-class
// operators. An ℓ¹ list is represented by its finitely supported part; an
// infinite list enters as its truncation to N terms, whose ℓ¹ tail ‖R_N‖₁ → 0
// controls the distance to the full operator.

#include <cstddef>

#include "majorant/eigenlist.hpp"
#include "majorant/hermitian.hpp"

namespace majorant {

/// Whether p can be the diagonal of a positive operator with eigenvalue list
/// lambda: every prefix of p is dominated by the matching prefix of lambda and the
/// totals agree within tol. Throws InvalidInput on negative entries.
bool feasible_diagonal(const EigenList& p, const EigenList& lambda, double tol = kListTolerance);

/// Positive semidefinite N×N matrix with diagonal p and eigenvalues lambda (both
/// zero-padded to N). A finitely supported list has a single unitary orbit, so
/// the realization is exact rather than approximate.
HermitianMatrix realize_finite_rank(const EigenList& lambda, const EigenList& p, std::size_t n);

/// Contraction L (dim×dim) with diag(L* A L) = (p_1, ..., p_r, 0, ..., 0), where
/// A is positive semidefinite and p is only required to be dominated by the top
/// r eigenvalues of A (no equality of totals).
ComplexMatrix contraction_diagonal(const HermitianMatrix& a, const EigenList& p);

struct ContractionCheck {
  double norm = 0.0;
  double max_diagonal_error = 0.0;
  bool holds = false;
};

/// Checks ||L|| <= 1 + norm_tol and diag(L* A L) = p (padded with zeros).
ContractionCheck check_contraction(const HermitianMatrix& a, const EigenList& p,
                                   const ComplexMatrix& l, double norm_tol = 1e-12,
                                   double diag_tol = 1e-10);

/// Tolerance for sum(p) = rank.
inline constexpr double kProjectionTraceTolerance = 1e-10;

/// Rank-m orthogonal projection on C^N whose diagonal is p (zero-padded to N).
/// Entries must lie in [0, 1] (InvalidInput) and sum to m (TraceMismatch).
HermitianMatrix projection_with_diagonal(const EigenList& p, std::size_t rank, std::size_t n);

/// sum_k |lambda_k - mu_k| after zero padding. A lower bound for ||A - B||₁ over
/// all operators A, B with those eigenvalue lists.
double eigenlist_l1_distance(const EigenList& lambda, const EigenList& mu);

}  // namespace majorant
