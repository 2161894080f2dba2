#include "majorant/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "majorant/errors.hpp"

namespace majorant::io {
namespace {

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw InvalidInput(std::string("expected a number for ") + what);
  return j.get<double>();
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Json to_json(const EigenList& list) {
  return Json{{"values", std::vector<double>(list.values().begin(), list.values().end())}};
}

Json to_json(const MajorizationReport& report) {
  Json j{{"holds", report.holds}, {"slack", report.slack}, {"trace_gap", report.trace_gap}};
  j["first_violation"] = report.first_violation ? Json(*report.first_violation) : Json(nullptr);
  return j;
}

Json to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return Json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

Json to_json(const HermitianMatrix& m) { return to_json(m.entries()); }

Json to_json(const CompactMeasure& m) {
  Json atoms = Json::array();
  for (const auto& atom : m.atoms()) atoms.push_back({{"x", atom.x}, {"mass", atom.mass}});
  Json pieces = Json::array();
  for (const auto& piece : m.pieces()) pieces.push_back({{"a", piece.a}, {"b", piece.b}, {"mass", piece.mass}});
  return Json{{"atoms", std::move(atoms)}, {"pieces", std::move(pieces)}};
}

Json to_json(const StepFunction& f) {
  return Json{{"N", f.cells()}, {"values", std::vector<double>(f.values().begin(), f.values().end())}};
}

Json to_json(const PinchReport& report) {
  return Json{
      {"experiment", "pinch"},
      {"n", report.config.n},
      {"trials", report.config.trials},
      {"seed", report.config.seed},
      {"generator", "mt19937_64, trial seed splitmix64(seed ^ splitmix64(k))"},
      {"convex_functions_per_trial", report.convex_functions_per_trial},
      {"positive_part_min_witness", report.positive_part_min_witness},
      {"convex_min_witness", report.convex_min_witness},
      {"convex_worst_function", report.convex_worst_function},
      {"min_witness", report.min_witness},
      {"max_violation", report.max_violation},
      {"schur_true", report.schur_true},
      {"schur_classical_agreements", report.schur_agreements},
      {"schur_min_slack", report.schur_min_slack},
      {"holds", report.holds},
  };
}

std::vector<double> values_from_json(const Json& j) {
  const Json& array = j.is_object() ? field(j, "values") : j;
  if (!array.is_array()) throw InvalidInput("expected an array of numbers");
  std::vector<double> out;
  out.reserve(array.size());
  for (const auto& v : array) out.push_back(number(v, "list entry"));
  return out;
}

EigenList eigenlist_from_json(const Json& j) { return EigenList(values_from_json(j)); }

ComplexMatrix matrix_from_json(const Json& j) {
  const Json& rows = field(j, "entries");
  if (!rows.is_array() || rows.empty()) throw InvalidInput("matrix entries must be a nonempty array");
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (j.contains("dim") && number(j.at("dim"), "dim") != static_cast<double>(n))
    throw InvalidInput("matrix dim does not match the number of rows");
  ComplexMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw InvalidInput("matrix rows must all have dim entries");
    for (Eigen::Index c = 0; c < n; ++c) {
      const Json& entry = row[static_cast<std::size_t>(c)];
      if (entry.is_number()) {
        m(r, c) = Complex(entry.get<double>(), 0.0);
      } else if (entry.is_array() && entry.size() == 2) {
        m(r, c) = Complex(number(entry[0], "real part"), number(entry[1], "imaginary part"));
      } else {
        throw InvalidInput("matrix entries must be [re, im] pairs");
      }
    }
  }
  return m;
}

HermitianMatrix hermitian_from_json(const Json& j) { return HermitianMatrix(matrix_from_json(j), 1e-9); }

CompactMeasure measure_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("measure must be a JSON object");
  std::vector<Atom> atoms;
  std::vector<Piece> pieces;
  if (j.contains("atoms")) {
    for (const auto& a : j.at("atoms")) atoms.push_back({number(field(a, "x"), "x"), number(field(a, "mass"), "mass")});
  }
  if (j.contains("pieces")) {
    for (const auto& p : j.at("pieces"))
      pieces.push_back({number(field(p, "a"), "a"), number(field(p, "b"), "b"), number(field(p, "mass"), "mass")});
  }
  CompactMeasure m(std::move(atoms), std::move(pieces));
  if (!m.is_probability()) throw InvalidInput("measure total mass must be 1");
  return m;
}

StepFunction step_function_from_json(const Json& j) {
  auto values = values_from_json(field(j, "values"));
  if (j.contains("N") && number(j.at("N"), "N") != static_cast<double>(values.size()))
    throw InvalidInput("step function N does not match the number of values");
  return StepFunction(std::move(values));
}

std::vector<double> values_from_csv(std::string_view text) {
  std::vector<double> out;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const auto value = trim(line);
    if (value.empty() || value.front() == '#') continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(std::string(value), &used);
    } catch (const std::exception&) {
      throw InvalidInput("CSV: cannot parse \"" + std::string(value) + "\"");
    }
    if (used != value.size()) throw InvalidInput("CSV: trailing characters in \"" + std::string(value) + "\"");
    out.push_back(v);
  }
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << contents;
}

namespace {
bool looks_inline(std::string_view s) {
  s = trim(s);
  return !s.empty() && (s.front() == '[' || s.front() == '{');
}
}  // namespace

std::vector<double> load_values(const std::string& literal_or_path) {
  if (looks_inline(literal_or_path)) return values_from_json(parse_json(literal_or_path));
  const std::string text = read_file(literal_or_path);
  if (looks_inline(text)) return values_from_json(parse_json(text));
  return values_from_csv(text);
}

Json load_json(const std::string& literal_or_path) {
  if (looks_inline(literal_or_path)) return parse_json(literal_or_path);
  return parse_json(read_file(literal_or_path));
}

}  // namespace majorant::io
