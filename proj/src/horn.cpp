#include "majorant/horn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "majorant/errors.hpp"

namespace majorant {
namespace {

void require_equal_length(const EigenList& lambda, const EigenList& p, const char* where) {
  if (lambda.size() != p.size())
    throw InvalidInput(std::string(where) + ": lambda and p must have equal length");
}

double list_scale(const EigenList& lambda, const EigenList& p) {
  double scale = 1.0;
  for (double v : lambda.values()) scale = std::max(scale, std::abs(v));
  for (double v : p.values()) scale = std::max(scale, std::abs(v));
  return scale;
}

// Rows/columns i, j of A <- U A U* and of W <- U W, in place.
void rotate_in_place(ComplexMatrix& a, ComplexMatrix& w, const TTransform& tau,
                     const RotationBlock& u) {
  const auto i = static_cast<Eigen::Index>(tau.i);
  const auto j = static_cast<Eigen::Index>(tau.j);

  const Eigen::RowVectorXcd ai = a.row(i);
  const Eigen::RowVectorXcd aj = a.row(j);
  a.row(i) = u.ii * ai + u.ij * aj;
  a.row(j) = u.ji * ai + u.jj * aj;

  const Eigen::VectorXcd ci = a.col(i);
  const Eigen::VectorXcd cj = a.col(j);
  a.col(i) = ci * std::conj(u.ii) + cj * std::conj(u.ij);
  a.col(j) = ci * std::conj(u.ji) + cj * std::conj(u.jj);

  const Eigen::RowVectorXcd wi = w.row(i);
  const Eigen::RowVectorXcd wj = w.row(j);
  w.row(i) = u.ii * wi + u.ij * wj;
  w.row(j) = u.ji * wi + u.jj * wj;
}

}  // namespace

void TTransform::validate(std::size_t dim) const {
  if (!(i < j) || j >= dim) throw InvalidInput("TTransform: need i < j < dim");
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("TTransform: t must lie in [0, 1]");
}

std::vector<double> apply_t_transform(std::span<const double> x, const TTransform& tau) {
  tau.validate(x.size());
  std::vector<double> out(x.begin(), x.end());
  out[tau.i] = tau.t * x[tau.i] + (1.0 - tau.t) * x[tau.j];
  out[tau.j] = tau.t * x[tau.j] + (1.0 - tau.t) * x[tau.i];
  return out;
}

std::vector<TTransform> t_transform_chain(const EigenList& lambda, const EigenList& p) {
  require_equal_length(lambda, p, "t_transform_chain");
  if (!check_majorization(p, lambda, MajorizationMode::equality, kFeasibilityTolerance).holds)
    throw MajorizationViolation("t_transform_chain: p is not majorized by lambda");

  const std::size_t n = lambda.size();
  const double tol = 64.0 * std::numeric_limits<double>::epsilon() * list_scale(lambda, p);
  std::vector<double> x(lambda.values().begin(), lambda.values().end());
  const auto& target = p.values();
  std::vector<TTransform> chain;

  while (chain.size() + 1 < n) {
    std::size_t i = 0;
    while (i < n && x[i] - target[i] <= tol) ++i;
    if (i == n) break;
    std::size_t j = i + 1;
    while (j < n && target[j] - x[j] <= tol) ++j;
    if (j == n) break;  // only round-off left at i

    const double delta = std::min(x[i] - target[i], target[j] - x[j]);
    const double t = std::clamp(1.0 - delta / (x[i] - x[j]), 0.0, 1.0);
    TTransform tau{i, j, t};
    x = apply_t_transform(x, tau);
    chain.push_back(tau);
  }
  return chain;
}

RotationBlock rotation_block(Complex a_ij, double t) {
  const double c = std::sqrt(t);
  const double s = std::sqrt(1.0 - t);
  // Cross terms carry a factor c·s, so z only matters when both are nonzero.
  const double magnitude = std::abs(a_ij);
  const bool free_phase = magnitude == 0.0 || s == 0.0 || c == 0.0;
  const Complex z = free_phase ? Complex(1.0, 0.0) : Complex(0.0, 1.0) * std::conj(a_ij) / magnitude;
  return {z * c, Complex(s, 0.0), -z * s, Complex(c, 0.0)};
}

RotationStep apply_t_transform(const HermitianMatrix& a, const TTransform& tau) {
  tau.validate(a.dim());
  const auto n = static_cast<Eigen::Index>(a.dim());
  const auto i = static_cast<Eigen::Index>(tau.i);
  const auto j = static_cast<Eigen::Index>(tau.j);
  const RotationBlock block = rotation_block(a(tau.i, tau.j), tau.t);

  ComplexMatrix u = ComplexMatrix::Identity(n, n);
  u(i, i) = block.ii;
  u(i, j) = block.ij;
  u(j, i) = block.ji;
  u(j, j) = block.jj;

  ComplexMatrix result = u * a.entries() * u.adjoint();
  return {std::move(u), HermitianMatrix(std::move(result), 1e-9)};
}

HornConstruction horn_construct_with_basis(const EigenList& lambda, const EigenList& p) {
  auto chain = t_transform_chain(lambda, p);
  const auto n = static_cast<Eigen::Index>(lambda.size());

  ComplexMatrix a = HermitianMatrix::diagonal(lambda.values()).entries();
  ComplexMatrix w = ComplexMatrix::Identity(n, n);
  for (const auto& tau : chain) {
    const RotationBlock block = rotation_block(a(static_cast<Eigen::Index>(tau.i),
                                                 static_cast<Eigen::Index>(tau.j)),
                                               tau.t);
    rotate_in_place(a, w, tau, block);
  }
  return {HermitianMatrix(std::move(a), 1e-9), std::move(w), std::move(chain)};
}

HermitianMatrix horn_construct(const EigenList& lambda, const EigenList& p) {
  return horn_construct_with_basis(lambda, p).matrix;
}

double ky_fan_sum(const HermitianMatrix& a, std::size_t k) {
  if (k == 0 || k > a.dim()) throw InvalidInput("ky_fan_sum: k must satisfy 1 <= k <= dim");
  const auto values = eigenvalues_desc(a);
  double total = 0.0;
  for (std::size_t r = 0; r < k; ++r) total += values[r];
  return total;
}

ComplexMatrix approx_conjugate(const HermitianMatrix& a, const HermitianMatrix& b, double eps) {
  if (a.dim() != b.dim()) throw InvalidInput("approx_conjugate: dimensions differ");
  if (!(eps > 0.0)) throw InvalidInput("approx_conjugate: epsilon must be positive");
  const auto ea = eigen_decompose(a);
  const auto eb = eigen_decompose(b);
  const double gap = (ea.values - eb.values).cwiseAbs().maxCoeff();
  if (gap > eps + kSpectralMatchSlack)
    throw DistributionMismatch("approx_conjugate: sorted spectra differ by more than epsilon");
  return eb.vectors * ea.vectors.adjoint();
}

}  // namespace majorant
