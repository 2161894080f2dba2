#include "majorant/eigenlist.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "majorant/errors.hpp"

namespace majorant {

EigenList::EigenList(std::vector<double> values, double tolerance)
    : values_(std::move(values)), tolerance_(tolerance) {
  if (values_.empty()) throw InvalidInput("EigenList: empty list");
  if (!(tolerance_ >= 0.0)) throw InvalidInput("EigenList: negative tolerance");
  for (double v : values_) {
    if (!std::isfinite(v)) throw InvalidInput("EigenList: non-finite entry");
  }
  for (std::size_t k = 0; k + 1 < values_.size(); ++k) {
    if (values_[k] < values_[k + 1] - tolerance_)
      throw InvalidInput("EigenList: values are not decreasing");
  }
}

double EigenList::sum() const { return std::accumulate(values_.begin(), values_.end(), 0.0); }

bool EigenList::nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v >= 0.0; });
}

std::vector<double> EigenList::padded(std::size_t n) const {
  std::vector<double> out(values_);
  if (out.size() < n) out.resize(n, 0.0);
  return out;
}

EigenList normalize_list(std::span<const double> raw) {
  if (raw.empty()) throw InvalidInput("normalize_list: empty input");
  std::vector<double> values(raw.begin(), raw.end());
  for (double v : values) {
    if (!std::isfinite(v)) throw InvalidInput("normalize_list: non-finite entry");
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return EigenList(std::move(values));
}

MajorizationReport check_majorization(const EigenList& p, const EigenList& lambda,
                                      MajorizationMode mode, double tol) {
  if (!(tol >= 0.0)) throw InvalidInput("check_majorization: negative tolerance");
  const std::size_t n = std::max(p.size(), lambda.size());
  const auto pv = p.padded(n);
  const auto lv = lambda.padded(n);

  MajorizationReport report;
  report.slack.resize(n);
  double big_p = 0.0;
  double big_lambda = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    big_p += pv[k];
    big_lambda += lv[k];
    report.slack[k] = big_lambda - big_p;
    if (!report.first_violation && report.slack[k] < -tol) report.first_violation = k + 1;
  }
  report.trace_gap = big_lambda - big_p;
  if (mode == MajorizationMode::equality && !report.first_violation &&
      std::abs(report.trace_gap) > tol) {
    report.first_violation = n;
  }
  report.holds = !report.first_violation.has_value();
  return report;
}

EigenList reduce_to_equality(const EigenList& p, const EigenList& lambda) {
  if (!p.nonnegative() || !lambda.nonnegative())
    throw InvalidInput("reduce_to_equality: lists must be nonnegative");
  const std::size_t n = p.size();
  const auto lv = lambda.padded(n);
  const auto& pv = p.values();

  double big_p = 0.0;
  double big_lambda = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    big_p += pv[k];
    big_lambda += lv[k];
    if (big_p > big_lambda + kListTolerance)
      throw MajorizationViolation("reduce_to_equality: prefix sums of p exceed those of lambda");
  }

  // Length-1 case: mu_1 = p_1 <= lambda_1.
  std::vector<double> mu{pv[0]};
  double prefix_p = pv[0];
  double prefix_lambda = lv[0];
  for (std::size_t m = 1; m < n; ++m) {
    prefix_p += pv[m];
    prefix_lambda += lv[m];
    // x = (mu', 0) has trace P_{m-1}; y = lambda[0..m] has trace Lambda_m.
    const double trace_x = prefix_p - pv[m];
    const double trace_y = prefix_lambda;
    double s = 0.0;
    if (trace_y != trace_x) s = std::clamp((prefix_p - trace_x) / (trace_y - trace_x), 0.0, 1.0);
    mu.push_back(0.0);
    for (std::size_t k = 0; k <= m; ++k) mu[k] = (1.0 - s) * mu[k] + s * lv[k];
  }
  return EigenList(std::move(mu));
}

bool hlp_convex_check(const EigenList& p, const EigenList& lambda,
                      std::span<const ConvexFunction> family, double tol) {
  if (family.empty()) throw InvalidInput("hlp_convex_check: empty function family");
  const std::size_t n = std::max(p.size(), lambda.size());
  const auto pv = p.padded(n);
  const auto lv = lambda.padded(n);
  if (std::abs(p.sum() - lambda.sum()) > tol)
    throw TraceMismatch("hlp_convex_check: sums of p and lambda differ");
  for (const auto& f : family) {
    double lhs = 0.0;
    double rhs = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      lhs += f(pv[k]);
      rhs += f(lv[k]);
    }
    if (lhs > rhs + tol) return false;
  }
  return true;
}

std::vector<ConvexFunction> hinge_family(const EigenList& p, const EigenList& lambda) {
  std::vector<double> knots(p.values().begin(), p.values().end());
  knots.insert(knots.end(), lambda.values().begin(), lambda.values().end());
  knots.push_back(0.0);  // zero padding of the shorter list
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
  std::vector<ConvexFunction> family;
  family.reserve(knots.size());
  for (double t : knots) family.push_back(hinge_function(t));
  return family;
}

}  // namespace majorant
