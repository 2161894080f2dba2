#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "majorant/convex.hpp"

namespace majorant {

/// Default absolute slack for monotonicity and prefix-sum comparisons.
inline constexpr double kListTolerance = 1e-12;

/// A finite, decreasing (within tolerance) real sequence: an eigenvalue list
/// or a diagonal list. Immutable once constructed.
class EigenList {
 public:
  /// Throws InvalidInput if `values` is empty, has a non-finite entry, or
  /// increases by more than `tolerance` anywhere.
  explicit EigenList(std::vector<double> values, double tolerance = kListTolerance);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t k) const { return values_[k]; }
  double tolerance() const { return tolerance_; }
  double sum() const;
  bool nonnegative() const;

  /// Values zero-padded (or left unchanged) to length n.
  std::vector<double> padded(std::size_t n) const;

  friend bool operator==(const EigenList&, const EigenList&) = default;

 private:
  std::vector<double> values_;
  double tolerance_;
};

/// Sorts arbitrary finite reals into decreasing order.
EigenList normalize_list(std::span<const double> raw);

enum class MajorizationMode { equality, dominance };

struct MajorizationReport {
  bool holds = false;
  /// Length k of the first failing prefix (1-based), if any.
  std::optional<std::size_t> first_violation;
  /// Lambda_k - P_k for every prefix length k = 1..n.
  std::vector<double> slack;
  /// sum(lambda) - sum(p).
  double trace_gap = 0.0;
};

/// Prefix-sum test p ≺ lambda. Shorter list is zero-padded. In equality mode the
/// totals must also agree within `tol`.
MajorizationReport check_majorization(const EigenList& p, const EigenList& lambda,
                                      MajorizationMode mode, double tol = kListTolerance);

/// Given nonnegative decreasing p, lambda with the prefix inequalities
/// P_k <= Lambda_k (k = 1..len p), returns decreasing mu, len(mu) = len(p), with
/// 0 <= mu_k <= lambda_k, P_k <= M_k and M_n = P_n.
///
/// Built by induction on length: the answer for length n-1 padded with a zero
/// and lambda itself both lie in the convex set cut out by the first n-1
/// constraints, and the trace functional is affine, so the convex combination
/// hitting P_n exactly stays feasible.
EigenList reduce_to_equality(const EigenList& p, const EigenList& lambda);

/// Hardy–Littlewood–Pólya corroboration: sum f(p_k) <= sum f(lambda_k) + tol for
/// every f in `family`. Throws TraceMismatch when the totals differ by more
/// than tol and InvalidInput for an empty family.
bool hlp_convex_check(const EigenList& p, const EigenList& lambda,
                      std::span<const ConvexFunction> family, double tol = 1e-10);

/// Hinge functions g_t with t at every entry of p and lambda.
std::vector<ConvexFunction> hinge_family(const EigenList& p, const EigenList& lambda);

}  // namespace majorant
