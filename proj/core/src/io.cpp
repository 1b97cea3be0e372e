#include "polysum/io.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace polysum {

using nlohmann::json;

namespace {

json mismatch_json(const std::optional<CoefficientMismatch>& mm) {
  if (!mm) return nullptr;
  return json{{"exponent", mm->exponent},
              {"lhs", to_string(mm->lhs)},
              {"rhs", to_string(mm->rhs)}};
}

json exception_json(const ExceptionRecord& rec) {
  return json{{"n", rec.n}, {"ell", rec.ell}, {"square_class_3", rec.square_class_3}};
}

}  // namespace

std::string to_csv(const QSeries& f) {
  std::ostringstream out;
  out << "# bound=" << f.bound() << "\n";
  out << "exponent,numerator,denominator\n";
  for (const auto& [e, v] : f.terms()) {
    out << e << "," << v.get_num().get_str() << "," << v.get_den().get_str() << "\n";
  }
  return out.str();
}

QSeries qseries_from_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::int64_t bound = -1;
  std::map<std::int64_t, Rational> terms;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("# bound=", 0) == 0) {
      bound = std::stoll(line.substr(8));
      continue;
    }
    if (line.rfind("exponent", 0) == 0) continue;  // header
    std::istringstream row(line);
    std::string e_s, num_s, den_s;
    if (!std::getline(row, e_s, ',') || !std::getline(row, num_s, ',') ||
        !std::getline(row, den_s, ','))
      throw std::invalid_argument("qseries_from_csv: malformed row: " + line);
    const std::int64_t e = std::stoll(e_s);
    Rational v{Integer(num_s), Integer(den_s)};
    v.canonicalize();
    terms.emplace(e, v);
  }
  if (bound < 0) {
    bound = terms.empty() ? 0 : terms.rbegin()->first;
  }
  return QSeries(bound, std::move(terms));
}

std::string to_json(const QSeries& f) {
  json terms = json::array();
  for (const auto& [e, v] : f.terms()) {
    terms.push_back(json{{"exponent", e},
                         {"numerator", v.get_num().get_str()},
                         {"denominator", v.get_den().get_str()}});
  }
  return json{{"bound", f.bound()}, {"terms", terms}}.dump();
}

QSeries qseries_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  std::map<std::int64_t, Rational> terms;
  for (const auto& t : j.at("terms")) {
    Rational v{Integer(t.at("numerator").get<std::string>()),
               Integer(t.at("denominator").get<std::string>())};
    v.canonicalize();
    terms.emplace(t.at("exponent").get<std::int64_t>(), v);
  }
  return QSeries(j.at("bound").get<std::int64_t>(), std::move(terms));
}

std::string to_json(const SiegelWeilReport& report) {
  return json{{"bound", report.bound},
              {"plus_identity_holds", report.plus_identity_holds},
              {"minus_identity_holds", report.minus_identity_holds},
              {"plus_mismatch", mismatch_json(report.plus_mismatch)},
              {"minus_mismatch", mismatch_json(report.minus_mismatch)},
              {"ok", report.ok()}}
      .dump();
}

std::string to_json(const Theorem52Report& report) {
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back(json{{"ell", v.ell}, {"count", v.count}});
  return json{{"prime_bound", report.prime_bound},
              {"checked_1_mod_12", report.checked_1_mod_12},
              {"checked_7_mod_12", report.checked_7_mod_12},
              {"violations", violations},
              {"ok", report.ok()}}
      .dump();
}

std::string to_json(const SieveIdentityReport& report) {
  return json{{"bound", report.bound},
              {"printed_term_matches", report.printed_term_matches},
              {"dilate9_term_matches", report.dilate9_term_matches},
              {"printed_mismatch", mismatch_json(report.printed_mismatch)},
              {"dilate9_mismatch", mismatch_json(report.dilate9_mismatch)},
              {"definitive", report.definitive()}}
      .dump();
}

std::string to_json(const ObstructionReport& report) {
  return json{{"m", report.m},
              {"modulus", report.modulus},
              {"missing_residues", report.missing_residues}}
      .dump();
}

std::string to_json(const SurveyReport& report) {
  json exceptions = json::array();
  for (const auto& rec : report.exceptions) exceptions.push_back(exception_json(rec));
  json largest = nullptr;
  if (report.largest_non_square_class) largest = *report.largest_non_square_class;
  return json{{"m", report.m},
              {"bound", report.bound},
              {"exceptions", exceptions},
              {"largest_non_square_class", largest},
              {"square_class_count", report.square_class_count}}
      .dump();
}

std::string to_json(const std::vector<WitnessReport>& witnesses) {
  json rows = json::array();
  for (const auto& w : witnesses) {
    rows.push_back(json{{"m", w.m}, {"ell", w.ell}, {"n", w.n}, {"verified", w.verified}});
  }
  return json{{"witnesses", rows}}.dump();
}

std::string to_csv(const SurveyReport& report) {
  std::ostringstream out;
  out << "n,ell,square_class_3\n";
  for (const auto& rec : report.exceptions) {
    out << rec.n << "," << rec.ell << "," << (rec.square_class_3 ? 1 : 0) << "\n";
  }
  return out.str();
}

std::string to_csv(const std::vector<WitnessReport>& witnesses) {
  std::ostringstream out;
  out << "m,ell,n,verified\n";
  for (const auto& w : witnesses) {
    out << w.m << "," << w.ell << "," << w.n << "," << (w.verified ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace polysum
