#include "majorant/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "majorant/errors.hpp"

namespace majorant {
namespace {

void require_probability(const CompactMeasure& m, const char* where) {
  if (!m.is_probability()) throw InvalidInput(std::string(where) + ": total mass must be 1");
}

// Measure of [s, ∞) contributed by the pieces; continuous in s.
double piece_survivor(const std::vector<Piece>& pieces, double s) {
  double total = 0.0;
  for (const auto& piece : pieces)
    total += piece.mass * std::clamp((piece.b - s) / (piece.b - piece.a), 0.0, 1.0);
  return total;
}

double hinge_tail(const CompactMeasure& m, double t) {
  double total = 0.0;
  for (const auto& atom : m.atoms()) total += atom.mass * std::max(atom.x - t, 0.0);
  for (const auto& piece : m.pieces()) {
    if (t <= piece.a) {
      total += piece.mass * (0.5 * (piece.a + piece.b) - t);
    } else if (t < piece.b) {
      const double width = piece.b - piece.a;
      total += piece.mass * (piece.b - t) * (piece.b - t) / (2.0 * width);
    }
  }
  return total;
}

// Trapezoid rule on each gap between breakpoints; the survivor function is
// linear there, so the rule is exact.
double survivor_tail(const CompactMeasure& m, double t) {
  const auto points = m.breakpoints();
  if (points.empty() || t >= points.back()) return 0.0;
  double total = 0.0;
  double left = t;
  for (double right : points) {
    if (right <= left) continue;
    double atoms_beyond = 0.0;
    for (const auto& atom : m.atoms())
      if (atom.x >= right) atoms_beyond += atom.mass;
    const double pieces_avg = 0.5 * (piece_survivor(m.pieces(), left) + piece_survivor(m.pieces(), right));
    total += (right - left) * (atoms_beyond + pieces_avg);
    left = right;
  }
  return total;
}

// Coefficients (α, β) of t² and t in the hinge tail on an open gap (lo, hi)
// free of breakpoints.
struct Quadratic {
  double alpha = 0.0;
  double beta = 0.0;
};

Quadratic hinge_coefficients(const CompactMeasure& m, double lo, double hi) {
  Quadratic q;
  for (const auto& atom : m.atoms())
    if (atom.x >= hi) q.beta -= atom.mass;
  for (const auto& piece : m.pieces()) {
    if (piece.a >= hi) {
      q.beta -= piece.mass;
    } else if (piece.a <= lo && piece.b >= hi) {
      const double width = piece.b - piece.a;
      q.alpha += piece.mass / (2.0 * width);
      q.beta -= piece.mass * piece.b / width;
    }
  }
  return q;
}

}  // namespace

CompactMeasure::CompactMeasure(std::vector<Atom> atoms, std::vector<Piece> pieces)
    : atoms_(std::move(atoms)), pieces_(std::move(pieces)) {
  for (const auto& atom : atoms_) {
    if (!std::isfinite(atom.x) || !std::isfinite(atom.mass) || !(atom.mass > 0.0))
      throw InvalidInput("CompactMeasure: atoms need a finite location and positive mass");
  }
  for (const auto& piece : pieces_) {
    if (!std::isfinite(piece.a) || !std::isfinite(piece.b) || !std::isfinite(piece.mass) ||
        !(piece.mass > 0.0) || !(piece.a < piece.b))
      throw InvalidInput("CompactMeasure: pieces need finite a < b and positive mass");
  }
  if (atoms_.empty() && pieces_.empty()) throw InvalidInput("CompactMeasure: empty measure");
}

CompactMeasure CompactMeasure::dirac(double x) { return CompactMeasure({{x, 1.0}}, {}); }

CompactMeasure CompactMeasure::uniform(double a, double b) { return CompactMeasure({}, {{a, b, 1.0}}); }

CompactMeasure CompactMeasure::from_list(std::span<const double> values) {
  if (values.empty()) throw InvalidInput("CompactMeasure::from_list: empty list");
  std::map<double, std::size_t> counts;
  for (double v : values) ++counts[v];
  const double unit = 1.0 / static_cast<double>(values.size());
  std::vector<Atom> atoms;
  atoms.reserve(counts.size());
  for (const auto& [x, count] : counts) atoms.push_back({x, static_cast<double>(count) * unit});
  return CompactMeasure(std::move(atoms), {});
}

double CompactMeasure::total_mass() const {
  double total = 0.0;
  for (const auto& atom : atoms_) total += atom.mass;
  for (const auto& piece : pieces_) total += piece.mass;
  return total;
}

double CompactMeasure::mean() const {
  double total = 0.0;
  for (const auto& atom : atoms_) total += atom.mass * atom.x;
  for (const auto& piece : pieces_) total += piece.mass * 0.5 * (piece.a + piece.b);
  return total;
}

bool CompactMeasure::is_probability() const { return std::abs(total_mass() - 1.0) <= kMassTolerance; }

std::vector<double> CompactMeasure::breakpoints() const {
  std::vector<double> points;
  points.reserve(atoms_.size() + 2 * pieces_.size());
  for (const auto& atom : atoms_) points.push_back(atom.x);
  for (const auto& piece : pieces_) {
    points.push_back(piece.a);
    points.push_back(piece.b);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

StepFunction::StepFunction(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw InvalidInput("StepFunction: need at least one cell");
  for (double v : values_)
    if (!std::isfinite(v)) throw InvalidInput("StepFunction: non-finite value");
}

double moment(const CompactMeasure& m, unsigned k) {
  double total = 0.0;
  for (const auto& atom : m.atoms()) total += atom.mass * std::pow(atom.x, k);
  for (const auto& piece : m.pieces()) {
    const double power = static_cast<double>(k) + 1.0;
    total += piece.mass * (std::pow(piece.b, power) - std::pow(piece.a, power)) /
             (power * (piece.b - piece.a));
  }
  return total;
}

CompactMeasure from_matrix(const HermitianMatrix& a) {
  auto values = eigenvalues_desc(a);
  // Eigenvalues equal up to solver round-off count as one atom.
  double scale = 1.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double merge = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  std::sort(values.begin(), values.end());
  const double unit = 1.0 / static_cast<double>(values.size());
  std::vector<Atom> atoms;
  for (std::size_t k = 0; k < values.size();) {
    std::size_t end = k + 1;
    while (end < values.size() && values[end] - values[k] <= merge) ++end;
    atoms.push_back({values[k], static_cast<double>(end - k) * unit});
    k = end;
  }
  return CompactMeasure(std::move(atoms), {});
}

CompactMeasure from_step_function(const StepFunction& f) {
  return CompactMeasure::from_list(f.values());
}

double tail_integral(const CompactMeasure& m, double t, TailMode mode) {
  if (!std::isfinite(t)) throw InvalidInput("tail_integral: threshold must be finite");
  return mode == TailMode::hinge ? hinge_tail(m, t) : survivor_tail(m, t);
}

double expectation(const CompactMeasure& m, const HingeCone& f) {
  double total = f.constant() * m.total_mass() + f.slope() * m.mean();
  for (const auto& term : f.terms()) total += term.weight * hinge_tail(m, term.knot);
  return total;
}

std::vector<double> order_check_points(const CompactMeasure& m, const CompactMeasure& n) {
  std::vector<double> points = m.breakpoints();
  const auto other = n.breakpoints();
  points.insert(points.end(), other.begin(), other.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<double> vertices;
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    const double lo = points[k];
    const double hi = points[k + 1];
    const Quadratic qm = hinge_coefficients(m, lo, hi);
    const Quadratic qn = hinge_coefficients(n, lo, hi);
    const double alpha = qm.alpha - qn.alpha;
    const double beta = qm.beta - qn.beta;
    if (alpha < 0.0) {
      const double vertex = -beta / (2.0 * alpha);
      if (vertex > lo && vertex < hi) vertices.push_back(vertex);
    }
  }
  points.insert(points.end(), vertices.begin(), vertices.end());
  std::sort(points.begin(), points.end());
  return points;
}

bool majorize_measure(const CompactMeasure& m, const CompactMeasure& n, OrderMethod method) {
  require_probability(m, "majorize_measure");
  require_probability(n, "majorize_measure");
  const auto points = order_check_points(m, n);

  switch (method) {
    case OrderMethod::hinge:
    case OrderMethod::survivor: {
      if (std::abs(m.mean() - n.mean()) > kOrderTolerance) return false;
      const TailMode mode = method == OrderMethod::hinge ? TailMode::hinge : TailMode::survivor;
      for (double t : points)
        if (tail_integral(m, t, mode) > tail_integral(n, t, mode) + kOrderTolerance) return false;
      return true;
    }
    case OrderMethod::convex_family: {
      // Affine functions in both signs force equal mass and equal mean; the
      // hinge generators then carry the inequality.
      std::vector<HingeCone> family{HingeCone(1.0, 0.0), HingeCone(-1.0, 0.0),
                                    HingeCone(0.0, 1.0), HingeCone(0.0, -1.0)};
      for (double t : points) family.emplace_back(0.0, 0.0, std::vector<HingeTerm>{{1.0, t}});
      for (const auto& f : family)
        if (expectation(m, f) > expectation(n, f) + kOrderTolerance) return false;
      return true;
    }
  }
  return false;
}

double quantile(const CompactMeasure& m, double u) {
  if (!(u > 0.0 && u <= 1.0)) throw InvalidInput("quantile: level must lie in (0, 1]");
  const auto points = m.breakpoints();
  double previous_x = points.front();
  double previous_f = 0.0;
  for (double x : points) {
    double jump = 0.0;
    for (const auto& atom : m.atoms())
      if (atom.x == x) jump += atom.mass;
    double density = 0.0;
    if (x > previous_x) {
      const double mid = 0.5 * (previous_x + x);
      for (const auto& piece : m.pieces())
        if (piece.a < mid && mid < piece.b) density += piece.mass / (piece.b - piece.a);
    }
    const double before_jump = previous_f + density * (x - previous_x);
    if (density > 0.0 && u <= before_jump)
      return std::min(x, previous_x + (u - previous_f) / density);
    if (u <= before_jump + jump) return x;
    previous_x = x;
    previous_f = before_jump + jump;
  }
  return points.back();
}

StepFunction quantile_transport(const CompactMeasure& m, std::size_t n) {
  if (n == 0) throw InvalidInput("quantile_transport: N must be positive");
  require_probability(m, "quantile_transport");
  std::vector<double> values(n);
  const double cells = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) values[k] = quantile(m, (static_cast<double>(k) + 0.5) / cells);
  return StepFunction(std::move(values));
}

}  // namespace majorant
