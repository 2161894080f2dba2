#include "majorant/random.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "majorant/errors.hpp"

namespace majorant {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index));
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = uniform();
  while (u == 0.0) u = uniform();
  const double v = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u));
  const double angle = 2.0 * std::numbers::pi * v;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

std::size_t Rng::index(std::size_t n) {
  if (n == 0) throw InvalidInput("Rng::index: empty range");
  return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n)));
}

namespace {

ComplexMatrix ginibre(std::size_t n, Rng& rng) {
  const auto d = static_cast<Eigen::Index>(n);
  ComplexMatrix g(d, d);
  for (Eigen::Index c = 0; c < d; ++c)
    for (Eigen::Index r = 0; r < d; ++r) g(r, c) = Complex(rng.normal(), rng.normal()) / std::sqrt(2.0);
  return g;
}

}  // namespace

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < q.cols(); ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

HermitianMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, rng);
  return HermitianMatrix((g + g.adjoint()) / std::sqrt(2.0 * static_cast<double>(n)));
}

HermitianMatrix random_psd(std::size_t n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, rng);
  return HermitianMatrix(g * g.adjoint() / static_cast<double>(n), 1e-10);
}

EigenList random_decreasing(std::size_t n, Rng& rng, double lo, double hi) {
  std::vector<double> values(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && rng.uniform() < 0.15)
      values[k] = values[rng.index(k)];
    else
      values[k] = rng.uniform(lo, hi);
  }
  std::sort(values.begin(), values.end(), std::greater<>());
  return EigenList(std::move(values));
}

EigenList random_schur_diagonal(const EigenList& lambda, Rng& rng) {
  const ComplexMatrix v = random_unitary(lambda.size(), rng);
  const HermitianMatrix d = HermitianMatrix::diagonal(lambda.values());
  const HermitianMatrix a(v * d.entries() * v.adjoint(), 1e-9);
  return normalize_list(a.diagonal_values());
}

ListPair random_majorizing_pair(std::size_t n, Rng& rng) {
  EigenList lambda = random_decreasing(n, rng, -1.0, 1.0);
  EigenList p = random_schur_diagonal(lambda, rng);
  return {std::move(p), std::move(lambda)};
}

ListPair random_dominance_pair(std::size_t n, Rng& rng) {
  EigenList lambda = random_decreasing(n, rng, 0.0, 1.0);
  const EigenList q = random_schur_diagonal(lambda, rng);
  // Shrinking entries of q keeps every top-k sum below that of q.
  const std::size_t r = 1 + rng.index(n);
  std::vector<double> p(q.values().begin(), q.values().end());
  for (double& v : p) v = std::max(v, 0.0) * (rng.uniform() < 0.3 ? 1.0 : rng.uniform());
  std::sort(p.begin(), p.end(), std::greater<>());
  p.resize(r);
  return {EigenList(std::move(p)), std::move(lambda)};
}

CompactMeasure random_measure(Rng& rng) {
  std::size_t atom_count = rng.index(5);
  std::size_t piece_count = rng.index(4);
  if (atom_count + piece_count == 0) atom_count = 1;
  std::vector<double> weights(atom_count + piece_count);
  double total = 0.0;
  for (double& w : weights) {
    w = 0.05 + rng.uniform();
    total += w;
  }
  std::vector<Atom> atoms;
  std::vector<Piece> pieces;
  std::size_t w = 0;
  for (std::size_t k = 0; k < atom_count; ++k) atoms.push_back({rng.uniform(-2.0, 2.0), weights[w++] / total});
  for (std::size_t k = 0; k < piece_count; ++k) {
    const double a = rng.uniform(-2.0, 1.5);
    const double b = a + 0.05 + rng.uniform() * (2.0 - a - 0.05);
    pieces.push_back({a, b, weights[w++] / total});
  }
  return CompactMeasure(std::move(atoms), std::move(pieces));
}

CompactMeasure dilate_about_mean(const CompactMeasure& m, double scale) {
  if (!(scale > 0.0)) throw InvalidInput("dilate_about_mean: scale must be positive");
  const double c = m.mean() / m.total_mass();
  std::vector<Atom> atoms;
  std::vector<Piece> pieces;
  for (const auto& atom : m.atoms()) atoms.push_back({c + scale * (atom.x - c), atom.mass});
  for (const auto& piece : m.pieces())
    pieces.push_back({c + scale * (piece.a - c), c + scale * (piece.b - c), piece.mass});
  return CompactMeasure(std::move(atoms), std::move(pieces));
}

CompactMeasure translate(const CompactMeasure& m, double shift) {
  std::vector<Atom> atoms;
  std::vector<Piece> pieces;
  for (const auto& atom : m.atoms()) atoms.push_back({atom.x + shift, atom.mass});
  for (const auto& piece : m.pieces()) pieces.push_back({piece.a + shift, piece.b + shift, piece.mass});
  return CompactMeasure(std::move(atoms), std::move(pieces));
}

}  // namespace majorant
