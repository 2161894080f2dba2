#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "majorant/convex.hpp"
#include "majorant/hermitian.hpp"

namespace majorant {

struct Atom {
  double x;
  double mass;
};

/// Uniform density mass / (b - a) on [a, b].
struct Piece {
  double a;
  double b;
  double mass;
};

inline constexpr double kMassTolerance = 1e-12;

/// A compactly supported finite measure made of point masses and uniform
/// pieces. Every operation that needs a probability measure checks the total
/// mass itself.
class CompactMeasure {
 public:
  /// Throws InvalidInput on non-positive masses, non-finite data or a >= b.
  CompactMeasure(std::vector<Atom> atoms, std::vector<Piece> pieces);

  static CompactMeasure dirac(double x);
  static CompactMeasure uniform(double a, double b);
  /// (1/n) Σ δ_{v_k}, equal values merged.
  static CompactMeasure from_list(std::span<const double> values);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  double total_mass() const;
  double mean() const;
  bool is_probability() const;

  /// Sorted distinct atom locations and piece endpoints.
  std::vector<double> breakpoints() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<Piece> pieces_;
};

/// N equal cells of [0, 1); values[k] is the value on [k/N, (k+1)/N).
class StepFunction {
 public:
  explicit StepFunction(std::vector<double> values);

  std::size_t cells() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }

 private:
  std::vector<double> values_;
};

/// ∫ x^k dm in closed form.
double moment(const CompactMeasure& m, unsigned k);

/// Normalized counting measure of the eigenvalues of A, multiplicities merged.
CompactMeasure from_matrix(const HermitianMatrix& a);

/// Distribution of a step function under Lebesgue measure on [0, 1).
CompactMeasure from_step_function(const StepFunction& f);

enum class TailMode {
  survivor,  ///< ∫_t^∞ m([s, ∞)) ds
  hinge,     ///< ∫ max(λ - t, 0) dm(λ)
};

/// The two modes are equal by integration by parts; they are computed independently.
double tail_integral(const CompactMeasure& m, double t, TailMode mode);

/// ∫ f dm for a hinge-cone element, in closed form.
double expectation(const CompactMeasure& m, const HingeCone& f);

enum class OrderMethod { hinge, survivor, convex_family };

inline constexpr double kOrderTolerance = 1e-10;

/// m ⪯ n: equal first moments and ∫(λ - t)₊ dm <= ∫(λ - t)₊ dn for every t.
/// The hinge difference is piecewise quadratic between breakpoints, so it is
/// checked at all breakpoints plus interior vertices. Throws InvalidInput
/// unless both are probability measures.
bool majorize_measure(const CompactMeasure& m, const CompactMeasure& n, OrderMethod method);

/// Thresholds that decide m ⪯ n: breakpoints of both plus interior maxima of
/// the hinge difference.
std::vector<double> order_check_points(const CompactMeasure& m, const CompactMeasure& n);

/// Left-continuous generalized inverse of the distribution function:
/// inf { x : m((-∞, x]) >= u } for u in (0, 1].
double quantile(const CompactMeasure& m, double u);

/// f(cell k) = quantile((k + 1/2) / N). Nondecreasing; its distribution is m
/// exactly when m is atomic with masses in (1/N)ℤ.
StepFunction quantile_transport(const CompactMeasure& m, std::size_t n);

}  // namespace majorant
