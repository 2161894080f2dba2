#include "majorant/pinching.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "majorant/eigenlist.hpp"
#include "majorant/errors.hpp"
#include "majorant/horn.hpp"

namespace majorant {

HermitianMatrix pinch_diag(const HermitianMatrix& a) {
  return HermitianMatrix::diagonal(a.diagonal_values());
}

HermitianMatrix positive_part(const HermitianMatrix& a) {
  return apply_function(a, [](double x) { return std::max(x, 0.0); });
}

PinchCheck convex_pinch_check(const HermitianMatrix& a, const ConvexFunction& f) {
  const auto diagonal = a.diagonal_values();
  const auto eig = eigen_decompose(a);
  for (Eigen::Index k = 0; k < eig.values.size(); ++k)
    if (!f.domain().contains(eig.values(k)))
      throw InvalidInput("convex_pinch_check: spectrum leaves the domain of " + f.name());
  for (double d : diagonal)
    if (!f.domain().contains(d))
      throw InvalidInput("convex_pinch_check: diagonal leaves the domain of " + f.name());

  Eigen::VectorXd fv(eig.values.size());
  for (Eigen::Index k = 0; k < fv.size(); ++k) fv(k) = f(eig.values(k));
  PinchCheck check;
  check.witness = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < diagonal.size(); ++k) {
    // (f(A))_kk = Σ_m f(λ_m) |v_km|²
    const auto row = static_cast<Eigen::Index>(k);
    double pinched = 0.0;
    for (Eigen::Index m = 0; m < fv.size(); ++m) pinched += fv(m) * std::norm(eig.vectors(row, m));
    check.witness = std::min(check.witness, pinched - f(diagonal[k]));
  }
  check.holds = check.witness >= -kPsdSlack;
  return check;
}

bool schur_distribution_check(const HermitianMatrix& a) {
  return majorize_measure(from_matrix(pinch_diag(a)), from_matrix(a), OrderMethod::hinge);
}

Alignment align_step_functions(const StepFunction& f, const StepFunction& g, double eps) {
  if (f.cells() != g.cells()) throw InvalidInput("align_step_functions: cell counts differ");
  if (!(eps >= 0.0)) throw InvalidInput("align_step_functions: epsilon must be nonnegative");
  const std::size_t n = f.cells();
  auto sorted_order = [n](const StepFunction& h) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&h](std::size_t x, std::size_t y) { return h[x] < h[y]; });
    return order;
  };
  const auto order_f = sorted_order(f);
  const auto order_g = sorted_order(g);

  Alignment out;
  out.permutation.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    const double gap = std::abs(f[order_f[r]] - g[order_g[r]]);
    if (gap > eps + kSpectralMatchSlack)
      throw DistributionMismatch("align_step_functions: sorted values differ by more than epsilon");
    out.permutation[order_g[r]] = order_f[r];
    out.achieved = std::max(out.achieved, gap);
  }
  return out;
}

}  // namespace majorant
