#include "majorant/convex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "majorant/errors.hpp"

namespace majorant {

bool Interval::contains(double x) const {
  const bool above = lo_open ? x > lo : x >= lo;
  const bool below = hi_open ? x < hi : x <= hi;
  return above && below;
}

ConvexFunction::ConvexFunction(std::string name, std::function<double(double)> fn, Interval domain)
    : name_(std::move(name)), fn_(std::move(fn)), domain_(domain) {
  if (!fn_) throw InvalidInput("ConvexFunction: empty callable");
}

ConvexFunction square_function() {
  return {"square", [](double x) { return x * x; }};
}

ConvexFunction absolute_function() {
  return {"abs", [](double x) { return std::abs(x); }};
}

ConvexFunction exponential_function() {
  return {"exp", [](double x) { return std::exp(x); }};
}

ConvexFunction hinge_function(double knot) {
  std::ostringstream name;
  name.precision(17);
  name << "hinge(" << knot << ")";
  return {name.str(), [knot](double x) { return std::max(x - knot, 0.0); }};
}

ConvexFunction negative_log_function() {
  Interval positive;
  positive.lo = 0.0;
  positive.lo_open = true;
  return {"neglog", [](double x) { return -std::log(x); }, positive};
}

HingeCone::HingeCone(double constant, double slope, std::vector<HingeTerm> terms)
    : constant_(constant), slope_(slope), terms_(std::move(terms)) {
  if (!std::isfinite(constant_) || !std::isfinite(slope_))
    throw InvalidInput("HingeCone: non-finite affine part");
  for (const auto& term : terms_) {
    if (!(term.weight >= 0.0) || !std::isfinite(term.weight) || !std::isfinite(term.knot))
      throw InvalidInput("HingeCone: hinge weights must be finite and nonnegative");
  }
}

double HingeCone::operator()(double x) const {
  double value = constant_ + slope_ * x;
  for (const auto& term : terms_) value += term.weight * std::max(x - term.knot, 0.0);
  return value;
}

ConvexFunction HingeCone::as_function() const {
  return {"cone", [cone = *this](double x) { return cone(x); }};
}

}  // namespace majorant
