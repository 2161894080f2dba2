#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "majorant/eigenlist.hpp"
#include "majorant/hermitian.hpp"

namespace majorant {

/// Slack allowed on the majorization precondition of the constructions.
inline constexpr double kFeasibilityTolerance = 1e-10;

/// x -> t·x + (1 - t)·(x∘τ) for the transposition τ = (i j). Indices are 0-based.
struct TTransform {
  std::size_t i = 0;
  std::size_t j = 0;
  double t = 1.0;

  /// Throws InvalidInput unless i < j < dim and 0 <= t <= 1.
  void validate(std::size_t dim) const;
};

std::vector<double> apply_t_transform(std::span<const double> x, const TTransform& tau);

/// A chain x_1 = lambda, ..., x_end = p of at most n-1 T-transforms.
///
/// Pivot rule: i is the first index with x_i > p_i, j the first index after i
/// with x_j < p_j; mass δ = min(x_i - p_i, p_j - x_j) moves from i to j. Each
/// step settles coordinate i or j for good.
std::vector<TTransform> t_transform_chain(const EigenList& lambda, const EigenList& p);

/// The 2×2 block of the rotation that realizes a T-transform on a matrix
/// diagonal: [[z cosθ, sinθ], [-z sinθ, cosθ]], cos²θ = t, z·a_ij imaginary.
struct RotationBlock {
  Complex ii, ij, ji, jj;
};

RotationBlock rotation_block(Complex a_ij, double t);

struct RotationStep {
  ComplexMatrix unitary;
  HermitianMatrix result;
};

/// U equal to the identity outside rows/columns {i, j} such that
/// diag(U A U*) = t·diag(A) + (1-t)·diag(A)∘τ. Returns U and U A U*.
RotationStep apply_t_transform(const HermitianMatrix& a, const TTransform& tau);

struct HornConstruction {
  HermitianMatrix matrix;
  /// W with matrix = W diag(lambda) W*.
  ComplexMatrix unitary;
  std::vector<TTransform> chain;
};

/// Hermitian matrix with eigenvalue list lambda and diagonal p (p ≺ lambda).
/// Throws MajorizationViolation when p is not majorized by lambda.
HornConstruction horn_construct_with_basis(const EigenList& lambda, const EigenList& p);
HermitianMatrix horn_construct(const EigenList& lambda, const EigenList& p);

/// λ_1 + ... + λ_k, the maximum of trace(A P) over rank-k projections P.
double ky_fan_sum(const HermitianMatrix& a, std::size_t k);

/// Slack on the ε-matching test that absorbs eigensolver round-off.
inline constexpr double kSpectralMatchSlack = 1e-12;

/// Unitary W with ||W A W* - B|| <= 2ε. Requires the sorted spectra of A and B to
/// agree entrywise within ε; otherwise throws DistributionMismatch. W maps the
/// k-th eigenvector of A onto the k-th eigenvector of B.
ComplexMatrix approx_conjugate(const HermitianMatrix& a, const HermitianMatrix& b, double eps);

}  // namespace majorant
