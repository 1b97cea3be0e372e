#pragma once

#include <string>

#include "polysum/local_analysis.hpp"
#include "polysum/qseries.hpp"
#include "polysum/spinor_m14.hpp"
#include "polysum/witnesses.hpp"

// Machine-readable serialization. All numerals are exact: integers or
// "num/den" strings, never floating point. JSON payloads are returned as
// strings so the JSON implementation stays private to the library.

namespace polysum {

/// "# bound=N" comment line, a header row, then one
/// "exponent,numerator,denominator" row per nonzero term.
std::string to_csv(const QSeries& f);
QSeries qseries_from_csv(const std::string& csv);

/// {"bound": N, "terms": [{"exponent": e, "numerator": "..",
///  "denominator": ".."}, ...]}
std::string to_json(const QSeries& f);
QSeries qseries_from_json(const std::string& json_text);

std::string to_json(const SiegelWeilReport& report);
std::string to_json(const Theorem52Report& report);
std::string to_json(const SieveIdentityReport& report);
std::string to_json(const ObstructionReport& report);
std::string to_json(const SurveyReport& report);
std::string to_json(const std::vector<WitnessReport>& witnesses);

std::string to_csv(const SurveyReport& report);
std::string to_csv(const std::vector<WitnessReport>& witnesses);

}  // namespace polysum
