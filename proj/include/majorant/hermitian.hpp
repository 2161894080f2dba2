#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace majorant {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kHermitianTolerance = 1e-12;

/// Dense n×n self-adjoint complex matrix. The constructor checks
/// |a_ij - conj(a_ji)| <= tolerance and then stores the exactly Hermitian part.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(ComplexMatrix entries, double tolerance = kHermitianTolerance);

  static HermitianMatrix diagonal(std::span<const double> values);
  static HermitianMatrix zero(std::size_t n);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const ComplexMatrix& entries() const { return entries_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  std::vector<double> diagonal_values() const;
  double trace() const;

 private:
  ComplexMatrix entries_;
};

/// Eigenpairs with eigenvalues in decreasing order; column k of `vectors` is the
/// eigenvector for values[k].
struct EigenDecomposition {
  Eigen::VectorXd values;
  ComplexMatrix vectors;
};

EigenDecomposition eigen_decompose(const HermitianMatrix& a);
std::vector<double> eigenvalues_desc(const HermitianMatrix& a);
double min_eigenvalue(const HermitianMatrix& a);

/// f(A) by spectral calculus.
HermitianMatrix apply_function(const HermitianMatrix& a, const std::function<double(double)>& f);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);
/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);
/// max |U U* - I| entrywise.
double unitarity_defect(const ComplexMatrix& u);

}  // namespace majorant
