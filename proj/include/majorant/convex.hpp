#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace majorant {

struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = false;
  bool hi_open = false;

  bool contains(double x) const;
};

/// A continuous convex function of one real variable together with the
/// interval on which it is defined. Convexity is the caller's promise.
class ConvexFunction {
 public:
  ConvexFunction(std::string name, std::function<double(double)> fn, Interval domain = {});

  double operator()(double x) const { return fn_(x); }
  const std::string& name() const { return name_; }
  const Interval& domain() const { return domain_; }

 private:
  std::string name_;
  std::function<double(double)> fn_;
  Interval domain_;
};

ConvexFunction square_function();
ConvexFunction absolute_function();
ConvexFunction exponential_function();
/// g_t(x) = max(x - t, 0).
ConvexFunction hinge_function(double knot);
/// -log(x), defined only for x > 0.
ConvexFunction negative_log_function();

// a + b x + sum_k c_k max(x - r_k, 0) with every c_k >= 0. These elements are
// uniformly dense in the continuous convex functions on a compact interval.
struct HingeTerm {
  double weight;
  double knot;
};

class HingeCone {
 public:
  HingeCone(double constant, double slope, std::vector<HingeTerm> terms = {});

  double operator()(double x) const;
  double constant() const { return constant_; }
  double slope() const { return slope_; }
  const std::vector<HingeTerm>& terms() const { return terms_; }
  ConvexFunction as_function() const;

 private:
  double constant_;
  double slope_;
  std::vector<HingeTerm> terms_;
};

}  // namespace majorant
