#include "majorant/experiment.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

#include "majorant/eigenlist.hpp"
#include "majorant/pinching.hpp"

namespace majorant {

int parallel_threads() { return omp_get_max_threads(); }

void set_parallel_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

std::vector<ConvexFunction> convex_test_family(const HermitianMatrix& a, Rng& rng) {
  const auto values = eigenvalues_desc(a);
  const double hi = values.front() + 0.1;
  const double lo = values.back() - 0.1;
  std::vector<ConvexFunction> family{square_function(), absolute_function(), exponential_function()};
  for (int k = 0; k < 20; ++k) family.push_back(hinge_function(rng.uniform(lo, hi)));
  for (int k = 0; k < 5; ++k) {
    std::vector<HingeTerm> terms;
    const std::size_t count = 1 + rng.index(4);
    for (std::size_t r = 0; r < count; ++r) terms.push_back({rng.uniform(0.0, 2.0), rng.uniform(lo, hi)});
    family.push_back(HingeCone(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), std::move(terms)).as_function());
  }
  return family;
}

PinchTrial run_pinch_trial(std::size_t n, Rng& rng) {
  const HermitianMatrix a = random_hermitian(n, rng);
  PinchTrial trial;
  trial.positive_part_witness = convex_pinch_check(a, hinge_function(0.0)).witness;

  trial.convex_witness = std::numeric_limits<double>::infinity();
  for (const auto& f : convex_test_family(a, rng)) {
    const double witness = convex_pinch_check(a, f).witness;
    if (witness < trial.convex_witness) {
      trial.convex_witness = witness;
      trial.worst_function = f.name();
    }
  }

  trial.schur_measure = schur_distribution_check(a);
  const auto classical = check_majorization(normalize_list(a.diagonal_values()),
                                            EigenList(eigenvalues_desc(a)),
                                            MajorizationMode::equality, kPsdSlack);
  trial.schur_classical = classical.holds;
  trial.schur_min_slack = *std::min_element(classical.slack.begin(), classical.slack.end());
  return trial;
}

PinchReport run_pinch_experiment(const PinchExperimentConfig& config, Execution execution) {
  const auto trials = run_trials<PinchTrial>(
      config.trials, config.seed, [&](Rng& rng, std::size_t) { return run_pinch_trial(config.n, rng); },
      execution);

  PinchReport report;
  report.config = config;
  report.convex_functions_per_trial = 28;
  const double inf = std::numeric_limits<double>::infinity();
  report.positive_part_min_witness = inf;
  report.convex_min_witness = inf;
  report.schur_min_slack = inf;
  for (const auto& trial : trials) {
    report.positive_part_min_witness = std::min(report.positive_part_min_witness, trial.positive_part_witness);
    if (trial.convex_witness < report.convex_min_witness) {
      report.convex_min_witness = trial.convex_witness;
      report.convex_worst_function = trial.worst_function;
    }
    report.schur_min_slack = std::min(report.schur_min_slack, trial.schur_min_slack);
    if (trial.schur_measure) ++report.schur_true;
    if (trial.schur_measure == trial.schur_classical) ++report.schur_agreements;
  }
  if (trials.empty()) {
    report.positive_part_min_witness = report.convex_min_witness = report.schur_min_slack = 0.0;
  }
  report.min_witness = std::min(report.positive_part_min_witness, report.convex_min_witness);
  report.max_violation = std::max(0.0, -report.min_witness);
  report.holds = report.min_witness >= -kPsdSlack && report.schur_true == config.trials &&
                 report.schur_agreements == config.trials;
  return report;
}

}  // namespace majorant
