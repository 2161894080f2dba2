#include "majorant/trace_class.hpp"

#include <algorithm>
#include <cmath>

#include "majorant/errors.hpp"
#include "majorant/horn.hpp"

namespace majorant {
namespace {

std::size_t support_size(const EigenList& list) {
  std::size_t count = list.size();
  while (count > 0 && list[count - 1] == 0.0) --count;
  return count;
}

EigenList padded_list(const EigenList& list, std::size_t n) {
  auto values = list.values();
  std::vector<double> out(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(std::min(n, values.size())));
  out.resize(n, 0.0);
  return EigenList(std::move(out), list.tolerance());
}

}  // namespace

bool feasible_diagonal(const EigenList& p, const EigenList& lambda, double tol) {
  if (!p.nonnegative() || !lambda.nonnegative())
    throw InvalidInput("feasible_diagonal: lists must be nonnegative");
  return check_majorization(p, lambda, MajorizationMode::equality, tol).holds;
}

HermitianMatrix realize_finite_rank(const EigenList& lambda, const EigenList& p, std::size_t n) {
  if (n == 0) throw InvalidInput("realize_finite_rank: N must be positive");
  if (support_size(lambda) > n || support_size(p) > n)
    throw InvalidInput("realize_finite_rank: N is too small to hold the supports");
  if (!feasible_diagonal(p, lambda, kFeasibilityTolerance))
    throw MajorizationViolation("realize_finite_rank: p is not a feasible diagonal for lambda");
  return horn_construct(padded_list(lambda, n), padded_list(p, n));
}

ComplexMatrix contraction_diagonal(const HermitianMatrix& a, const EigenList& p) {
  const std::size_t dim = a.dim();
  const std::size_t r = p.size();
  if (r > dim) throw InvalidInput("contraction_diagonal: p is longer than dim(A)");
  if (!p.nonnegative()) throw InvalidInput("contraction_diagonal: p must be nonnegative");

  const auto eig = eigen_decompose(a);
  const double scale = std::max(1.0, eig.values.cwiseAbs().maxCoeff());
  if (eig.values(eig.values.size() - 1) < -1e-10 * scale)
    throw InvalidInput("contraction_diagonal: A must be positive semidefinite");

  std::vector<double> top(r);
  for (std::size_t k = 0; k < r; ++k) top[k] = std::max(eig.values(static_cast<Eigen::Index>(k)), 0.0);
  const EigenList lambda(top);
  if (!check_majorization(p, lambda, MajorizationMode::dominance, kFeasibilityTolerance).holds)
    throw MajorizationViolation("contraction_diagonal: p is not dominated by the top eigenvalues");

  // mu <= lambda with equal trace to p, then an orthonormal family v_k in the
  // top-r eigenspace with <diag(mu) v_k, v_k> = p_k.
  const EigenList mu = reduce_to_equality(p, lambda);
  const HornConstruction horn = horn_construct_with_basis(mu, p);
  const auto ri = static_cast<Eigen::Index>(r);
  const ComplexMatrix coords = horn.unitary.adjoint();  // column k = v_k in eigen-coordinates
  const ComplexMatrix frame = eig.vectors.leftCols(ri) * coords;

  const auto di = static_cast<Eigen::Index>(dim);
  ComplexMatrix l = ComplexMatrix::Zero(di, di);
  for (Eigen::Index k = 0; k < ri; ++k) {
    double weight = 0.0;  // <A v_k, v_k> >= <diag(mu) v_k, v_k> = p_k
    for (Eigen::Index m = 0; m < ri; ++m) weight += top[static_cast<std::size_t>(m)] * std::norm(coords(m, k));
    const double t = weight > 0.0 ? std::clamp(p[static_cast<std::size_t>(k)] / weight, 0.0, 1.0) : 0.0;
    l.col(k) = std::sqrt(t) * frame.col(k);
  }
  return l;
}

ContractionCheck check_contraction(const HermitianMatrix& a, const EigenList& p,
                                   const ComplexMatrix& l, double norm_tol, double diag_tol) {
  ContractionCheck check;
  const auto di = static_cast<Eigen::Index>(a.dim());
  if (l.rows() != di || l.cols() != di)
    throw InvalidInput("check_contraction: L has the wrong shape");
  check.norm = operator_norm(l);
  const ComplexMatrix compressed = l.adjoint() * a.entries() * l;
  const auto target = p.padded(a.dim());
  for (Eigen::Index k = 0; k < di; ++k) {
    const double expected = static_cast<std::size_t>(k) < target.size() ? target[static_cast<std::size_t>(k)] : 0.0;
    check.max_diagonal_error = std::max(check.max_diagonal_error, std::abs(compressed(k, k).real() - expected));
  }
  check.holds = check.norm <= 1.0 + norm_tol && check.max_diagonal_error <= diag_tol;
  return check;
}

HermitianMatrix projection_with_diagonal(const EigenList& p, std::size_t rank, std::size_t n) {
  if (n == 0) throw InvalidInput("projection_with_diagonal: N must be positive");
  if (rank > n) throw InvalidInput("projection_with_diagonal: rank exceeds N");
  for (double v : p.values()) {
    if (v < 0.0 || v > 1.0) throw InvalidInput("projection_with_diagonal: entries must lie in [0, 1]");
  }
  if (support_size(p) > n) throw InvalidInput("projection_with_diagonal: p has more than N nonzero entries");
  if (std::abs(p.sum() - static_cast<double>(rank)) > kProjectionTraceTolerance)
    throw TraceMismatch("projection_with_diagonal: sum of p differs from the rank");

  std::vector<double> ones(n, 0.0);
  std::fill(ones.begin(), ones.begin() + static_cast<std::ptrdiff_t>(rank), 1.0);
  return horn_construct(EigenList(std::move(ones)), padded_list(p, n));
}

double eigenlist_l1_distance(const EigenList& lambda, const EigenList& mu) {
  const std::size_t n = std::max(lambda.size(), mu.size());
  const auto lv = lambda.padded(n);
  const auto mv = mu.padded(n);
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) total += std::abs(lv[k] - mv[k]);
  return total;
}

}  // namespace majorant
