#pragma once

// File formats:
//   EigenList      {"values": [r1, r2, ...]}, a bare array, or CSV with one value per line
//   matrix         {"dim": n, "entries": [[[re, im], ...], ...]} row-major
//   CompactMeasure {"atoms": [{"x": r, "mass": r}], "pieces": [{"a": r, "b": r, "mass": r}]}
//   StepFunction   {"N": n, "values": [...]}

#include <string>
#include <string_view>

#include <json.hpp>

#include "majorant/eigenlist.hpp"
#include "majorant/experiment.hpp"
#include "majorant/hermitian.hpp"
#include "majorant/measure.hpp"

namespace majorant::io {

using Json = nlohmann::json;

Json to_json(const EigenList& list);
Json to_json(const MajorizationReport& report);
Json to_json(const ComplexMatrix& m);
Json to_json(const HermitianMatrix& m);
Json to_json(const CompactMeasure& m);
Json to_json(const StepFunction& f);
Json to_json(const PinchReport& report);

/// Raw (unsorted) values. Accepts {"values": [...]} or a bare array.
std::vector<double> values_from_json(const Json& j);
EigenList eigenlist_from_json(const Json& j);
ComplexMatrix matrix_from_json(const Json& j);
HermitianMatrix hermitian_from_json(const Json& j);
CompactMeasure measure_from_json(const Json& j);
StepFunction step_function_from_json(const Json& j);

/// One value per line; blank lines and lines starting with '#' are skipped.
std::vector<double> values_from_csv(std::string_view text);

Json parse_json(std::string_view text);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// An inline JSON literal ("[1,2,3]" or "{...}") or a path to a JSON/CSV file.
std::vector<double> load_values(const std::string& literal_or_path);
/// Inline JSON or a path to a JSON file.
Json load_json(const std::string& literal_or_path);

}  // namespace majorant::io
