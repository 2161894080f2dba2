#pragma once

// Reproducible random inputs. The engine is std::mt19937_64 (its output
// sequence is fixed by the C++ standard); uniforms take the top 53 bits and
// normals use Box–Muller, so every draw is identical across platforms.
// Trial k of a run with base seed s is seeded with trial_seed(s, k).

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "majorant/eigenlist.hpp"
#include "majorant/hermitian.hpp"
#include "majorant/measure.hpp"

namespace majorant {

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  double normal();
  /// Uniform on {0, ..., n-1}.
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-distributed unitary (QR of a complex Ginibre matrix, phases fixed).
ComplexMatrix random_unitary(std::size_t n, Rng& rng);
/// GUE scaled so the spectrum sits roughly in [-2, 2].
HermitianMatrix random_hermitian(std::size_t n, Rng& rng);
/// G G* / n for a complex Ginibre G.
HermitianMatrix random_psd(std::size_t n, Rng& rng);
/// Decreasing list in [lo, hi], with occasional repeated values.
EigenList random_decreasing(std::size_t n, Rng& rng, double lo, double hi);
/// Sorted diagonal of V diag(lambda) V* for Haar V; majorized by lambda.
EigenList random_schur_diagonal(const EigenList& lambda, Rng& rng);

struct ListPair {
  EigenList p;
  EigenList lambda;
};

/// p ≺ lambda with equal totals, length n.
ListPair random_majorizing_pair(std::size_t n, Rng& rng);
/// Nonnegative p with prefix sums dominated by lambda; len(p) <= len(lambda) = n.
ListPair random_dominance_pair(std::size_t n, Rng& rng);

/// A probability measure with 0–4 atoms and 0–3 uniform pieces in [-2, 2].
CompactMeasure random_measure(Rng& rng);
/// Image of m under x -> c + scale·(x - c), c the mean of m; scale > 0.
CompactMeasure dilate_about_mean(const CompactMeasure& m, double scale);
/// m translated by shift.
CompactMeasure translate(const CompactMeasure& m, double shift);

}  // namespace majorant
