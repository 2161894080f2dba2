#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "majorant/eigenlist.hpp"
#include "majorant/errors.hpp"
#include "majorant/experiment.hpp"
#include "majorant/horn.hpp"
#include "majorant/io.hpp"
#include "majorant/measure.hpp"
#include "majorant/pinching.hpp"
#include "majorant/trace_class.hpp"

namespace majorant::cli {
namespace {

using io::Json;

// Where a subcommand's JSON result goes: the -o file if given, else stdout.
struct Output {
  std::string path;

  void emit(const Json& j, std::ostream& out) const {
    const std::string text = j.dump(2) + "\n";
    if (path.empty())
      out << text;
    else
      io::write_file(path, text);
  }
};

EigenList load_list(const std::string& source) { return normalize_list(io::load_values(source)); }

// A matrix, a measure, the output of `measure`, or a plain list (its counting measure).
CompactMeasure load_measure(const std::string& source) {
  const Json j = io::load_json(source);
  if (j.is_array()) return CompactMeasure::from_list(io::values_from_json(j));
  if (j.is_object() && j.contains("measure")) return io::measure_from_json(j.at("measure"));
  if (j.is_object() && j.contains("entries")) return from_matrix(io::hermitian_from_json(j));
  if (j.is_object() && j.contains("values")) return CompactMeasure::from_list(io::values_from_json(j));
  return io::measure_from_json(j);
}

std::optional<std::uint64_t> seed_from_env() {
  const char* raw = std::getenv("MAJORANT_SEED");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const std::string text(raw);
    const auto seed = std::stoull(text, &used, 0);
    if (used != text.size()) throw InvalidInput("MAJORANT_SEED must be an unsigned integer");
    return seed;
  } catch (const std::logic_error&) {
    throw InvalidInput("MAJORANT_SEED must be an unsigned integer");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur–Horn constructions, majorization and pinching checks", "majorant"};
  app.require_subcommand(1);
  Output output;
  std::function<int()> action;

  // majorize
  std::string p_source, lambda_source, mode_name = "equality";
  double tol = kListTolerance;
  auto* majorize = app.add_subcommand("majorize", "Prefix-sum majorization report for p against lambda");
  majorize->add_option("--p", p_source, "p as inline JSON or a JSON/CSV file")->required();
  majorize->add_option("--lambda", lambda_source, "lambda as inline JSON or a JSON/CSV file")->required();
  majorize->add_option("--mode", mode_name, "equality or dominance")
      ->check(CLI::IsMember({"equality", "dominance"}));
  majorize->add_option("--tol", tol, "absolute tolerance");
  majorize->add_option("-o,--output", output.path);
  majorize->callback([&] {
    action = [&] {
      const auto mode = mode_name == "equality" ? MajorizationMode::equality : MajorizationMode::dominance;
      const auto report = check_majorization(load_list(p_source), load_list(lambda_source), mode, tol);
      output.emit(io::to_json(report), out);
      return report.holds ? kExitTrue : kExitFalse;
    };
  });

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Reduce lambda to mu with sum(mu) = sum(p)");
  reduce->add_option("--p", p_source)->required();
  reduce->add_option("--lambda", lambda_source)->required();
  reduce->add_option("-o,--output", output.path);
  reduce->callback([&] {
    action = [&] {
      output.emit(io::to_json(reduce_to_equality(load_list(p_source), load_list(lambda_source))), out);
      return kExitTrue;
    };
  });

  // construct
  std::size_t truncate = 0;
  auto* construct = app.add_subcommand("construct", "Hermitian matrix with spectrum lambda and diagonal p");
  construct->add_option("--lambda", lambda_source)->required();
  construct->add_option("--p", p_source)->required();
  construct->add_option("--truncate", truncate, "realize at truncation size N (positive trace-class lists)");
  construct->add_option("-o,--output", output.path);
  construct->callback([&] {
    action = [&] {
      const auto lambda = load_list(lambda_source);
      const auto p = load_list(p_source);
      const auto m = truncate > 0 ? realize_finite_rank(lambda, p, truncate) : horn_construct(lambda, p);
      output.emit(io::to_json(m), out);
      return kExitTrue;
    };
  });

  // contraction
  std::string matrix_source;
  auto* contraction = app.add_subcommand("contraction", "Contraction L with diag(L* A L) = p");
  contraction->add_option("--matrix", matrix_source, "positive semidefinite A (matrix JSON)")->required();
  contraction->add_option("--p", p_source)->required();
  contraction->add_option("-o,--output", output.path);
  contraction->callback([&] {
    action = [&] {
      const auto a = io::hermitian_from_json(io::load_json(matrix_source));
      output.emit(io::to_json(contraction_diagonal(a, load_list(p_source))), out);
      return kExitTrue;
    };
  });

  // projection
  std::size_t rank = 0;
  std::size_t cells = 0;
  auto* projection = app.add_subcommand("projection", "Rank-m projection with diagonal p");
  projection->add_option("--p", p_source)->required();
  projection->add_option("--m", rank, "rank")->required();
  projection->add_option("--N", cells, "dimension")->required();
  projection->add_option("-o,--output", output.path);
  projection->callback([&] {
    action = [&] {
      output.emit(io::to_json(projection_with_diagonal(load_list(p_source), rank, cells)), out);
      return kExitTrue;
    };
  });

  // measure
  std::string measure_source;
  unsigned max_moment = 6;
  std::vector<double> thresholds;
  auto* measure = app.add_subcommand("measure", "Spectral distribution, moments and tail integrals");
  measure->add_option("input", measure_source, "matrix JSON, measure JSON or list")->required();
  measure->add_option("--moments", max_moment, "highest moment reported");
  measure->add_option("--tail", thresholds, "thresholds t (default: all breakpoints)");
  measure->add_option("-o,--output", output.path);
  measure->callback([&] {
    action = [&] {
      const auto m = load_measure(measure_source);
      Json moments = Json::array();
      for (unsigned k = 0; k <= max_moment; ++k) moments.push_back(moment(m, k));
      Json tails = Json::array();
      for (double t : thresholds.empty() ? m.breakpoints() : thresholds) {
        tails.push_back({{"t", t},
                         {"hinge", tail_integral(m, t, TailMode::hinge)},
                         {"survivor", tail_integral(m, t, TailMode::survivor)}});
      }
      output.emit(Json{{"measure", io::to_json(m)}, {"mean", m.mean()}, {"moments", moments}, {"tails", tails}}, out);
      return kExitTrue;
    };
  });

  // majorize-measure
  std::string m_source, n_source;
  auto* order = app.add_subcommand("majorize-measure", "Decide m ⪯ n with all three methods");
  order->add_option("--m", m_source)->required();
  order->add_option("--n", n_source)->required();
  order->add_option("-o,--output", output.path);
  order->callback([&] {
    action = [&] {
      const auto m = load_measure(m_source);
      const auto n = load_measure(n_source);
      const bool hinge = majorize_measure(m, n, OrderMethod::hinge);
      const bool survivor = majorize_measure(m, n, OrderMethod::survivor);
      const bool family = majorize_measure(m, n, OrderMethod::convex_family);
      output.emit(Json{{"hinge", hinge}, {"survivor", survivor}, {"convex_family", family}, {"holds", hinge}}, out);
      return hinge ? kExitTrue : kExitFalse;
    };
  });

  // transport
  auto* transport = app.add_subcommand("transport", "Quantile step function of a measure");
  transport->add_option("--measure", measure_source)->required();
  transport->add_option("--N", cells, "number of cells")->required();
  transport->add_option("-o,--output", output.path);
  transport->callback([&] {
    action = [&] {
      output.emit(io::to_json(quantile_transport(load_measure(measure_source), cells)), out);
      return kExitTrue;
    };
  });

  // pinch-experiment
  PinchExperimentConfig config;
  int threads = 0;
  bool serial = false;
  auto* pinch = app.add_subcommand("pinch-experiment", "Randomized pinching, convexity and Schur checks");
  pinch->add_option("--n", config.n, "matrix dimension")->check(CLI::PositiveNumber);
  pinch->add_option("--trials", config.trials);
  pinch->add_option("--seed", config.seed, "64-bit seed (MAJORANT_SEED overrides)");
  pinch->add_option("--threads", threads, "OpenMP threads (0 = runtime default)");
  pinch->add_flag("--serial", serial, "use the serial reference runner");
  pinch->add_option("-o,--output", output.path);
  pinch->callback([&] {
    action = [&] {
      if (const auto env = seed_from_env()) config.seed = *env;
      set_parallel_threads(threads);
      const auto report = run_pinch_experiment(config, serial ? Execution::serial : Execution::parallel);
      output.emit(io::to_json(report), out);
      return report.holds ? kExitTrue : kExitFalse;
    };
  });

  // align
  std::string f_source, g_source;
  double eps = 0.0;
  auto* align = app.add_subcommand("align", "Cell permutation bringing f within 2ε of g");
  align->add_option("--f", f_source)->required();
  align->add_option("--g", g_source)->required();
  align->add_option("--eps", eps)->required();
  align->add_option("-o,--output", output.path);
  align->callback([&] {
    action = [&] {
      const auto f = io::step_function_from_json(io::load_json(f_source));
      const auto g = io::step_function_from_json(io::load_json(g_source));
      const auto result = align_step_functions(f, g, eps);
      output.emit(Json{{"permutation", result.permutation}, {"achieved", result.achieved}}, out);
      return kExitTrue;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitTrue : kExitInputError;
  }

  try {
    return action ? action() : kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace majorant::cli
