#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <string>
#include <vector>

#include "majorant/random.hpp"

namespace majorant {

enum class Execution { serial, parallel };

/// Runs `count` independent trials. Trial k gets its own Rng seeded with
/// trial_seed(seed, k) and writes only results[k], so the serial and the
/// OpenMP paths produce identical vectors. The first exception thrown by any
/// trial is rethrown after the loop.
template <class Result, class Trial>
std::vector<Result> run_trials(std::size_t count, std::uint64_t seed, Trial&& trial,
                               Execution execution = Execution::parallel) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  const auto total = static_cast<std::int64_t>(count);
  auto body = [&](std::int64_t k) {
    try {
      Rng rng(trial_seed(seed, static_cast<std::uint64_t>(k)));
      results[static_cast<std::size_t>(k)] = trial(rng, static_cast<std::size_t>(k));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  };
  if (execution == Execution::serial) {
    for (std::int64_t k = 0; k < total; ++k) body(k);
  } else {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t k = 0; k < total; ++k) body(k);
  }
  for (const auto& error : errors)
    if (error) std::rethrow_exception(error);
  return results;
}

/// Number of worker threads the parallel path would use.
int parallel_threads();
void set_parallel_threads(int threads);

struct PinchExperimentConfig {
  std::size_t n = 20;
  std::size_t trials = 1000;
  std::uint64_t seed = 7;
};

/// Per-trial outcome of the pinching experiment on one random Hermitian A.
struct PinchTrial {
  double positive_part_witness = 0.0;  ///< min eig E(A₊) - E(A)₊
  double convex_witness = 0.0;         ///< min over the convex family
  std::string worst_function;
  bool schur_measure = false;    ///< m_{E(A)} ⪯ m_A
  bool schur_classical = false;  ///< sorted diag ≺ eigenvalues
  double schur_min_slack = 0.0;
};

struct PinchReport {
  PinchExperimentConfig config;
  std::size_t convex_functions_per_trial = 0;
  double positive_part_min_witness = 0.0;
  double convex_min_witness = 0.0;
  std::string convex_worst_function;
  double min_witness = 0.0;
  double max_violation = 0.0;
  std::size_t schur_true = 0;
  std::size_t schur_agreements = 0;
  double schur_min_slack = 0.0;
  bool holds = false;
};

/// The test family used per trial: x², |x|, exp, 20 hinges at random knots in
/// the spectral range and 5 random hinge-cone elements.
std::vector<ConvexFunction> convex_test_family(const HermitianMatrix& a, Rng& rng);

PinchTrial run_pinch_trial(std::size_t n, Rng& rng);
PinchReport run_pinch_experiment(const PinchExperimentConfig& config,
                                 Execution execution = Execution::parallel);

}  // namespace majorant
