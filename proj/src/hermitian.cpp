#include "majorant/hermitian.hpp"

#include <algorithm>
#include <cmath>

#include "majorant/errors.hpp"

namespace majorant {

HermitianMatrix::HermitianMatrix(ComplexMatrix entries, double tolerance)
    : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() != entries_.cols())
    throw InvalidInput("HermitianMatrix: matrix must be square and nonempty");
  if (!entries_.allFinite()) throw InvalidInput("HermitianMatrix: non-finite entry");
  const double defect = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tolerance) throw InvalidInput("HermitianMatrix: matrix is not self-adjoint");
  ComplexMatrix sym = (entries_ + entries_.adjoint()) * 0.5;
  entries_ = std::move(sym);
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  if (values.empty()) throw InvalidInput("HermitianMatrix::diagonal: empty diagonal");
  const auto n = static_cast<Eigen::Index>(values.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) m(k, k) = values[static_cast<std::size_t>(k)];
  return HermitianMatrix(std::move(m));
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
  const auto dim = static_cast<Eigen::Index>(n);
  return HermitianMatrix(ComplexMatrix::Zero(dim, dim));
}

std::vector<double> HermitianMatrix::diagonal_values() const {
  std::vector<double> d(dim());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = (*this)(k, k).real();
  return d;
}

double HermitianMatrix::trace() const { return entries_.trace().real(); }

EigenDecomposition eigen_decompose(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.entries());
  if (solver.info() != Eigen::Success) throw Error("eigen_decompose: eigensolver failed");
  // Eigen returns ascending order.
  EigenDecomposition out;
  out.values = solver.eigenvalues().reverse();
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

std::vector<double> eigenvalues_desc(const HermitianMatrix& a) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigenvalues_desc: eigensolver failed");
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + solver.eigenvalues().size());
  std::reverse(values.begin(), values.end());
  return values;
}

double min_eigenvalue(const HermitianMatrix& a) { return eigenvalues_desc(a).back(); }

HermitianMatrix apply_function(const HermitianMatrix& a, const std::function<double(double)>& f) {
  const auto eig = eigen_decompose(a);
  Eigen::VectorXd fv(eig.values.size());
  for (Eigen::Index k = 0; k < fv.size(); ++k) fv(k) = f(eig.values(k));
  ComplexMatrix out = eig.vectors * fv.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  return HermitianMatrix(std::move(out), 1e-8 * std::max(1.0, fv.cwiseAbs().maxCoeff()));
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues()(0);
}

double trace_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

double unitarity_defect(const ComplexMatrix& u) {
  const ComplexMatrix gram = u * u.adjoint();
  return (gram - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

}  // namespace majorant
