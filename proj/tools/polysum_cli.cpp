// polysum: decides and counts representations of integers as sums of three
// generalized m-gonal numbers, and verifies the genus/spinor-genus theta
// identities behind the m = 2 (mod 12) exception families.
//
// Exit codes: 0 success, 1 verified-property failure, 2 invalid input.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "polysum/arith.hpp"
#include "polysum/class_numbers.hpp"
#include "polysum/coset_lattice.hpp"
#include "polysum/io.hpp"
#include "polysum/local_analysis.hpp"
#include "polysum/polygonal.hpp"
#include "polysum/qseries.hpp"
#include "polysum/spinor_m14.hpp"
#include "polysum/witnesses.hpp"

using namespace polysum;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;

struct Options {
  std::string format = "text";
  int threads = 0;
};

bool want_json(const Options& o) { return o.format == "json"; }
bool want_csv(const Options& o) { return o.format == "csv"; }

int reject_csv(const char* what) {
  std::cerr << "error: --format csv is not available for " << what << "\n";
  return kExitBadInput;
}

int cmd_represent(const Options& opt, std::int64_t m, std::int64_t n) {
  PolygonalFamily family(m);
  const std::int64_t count = representation_count(family, n);
  const std::int64_t ell = ell_of(family, n);
  json out{{"m", m}, {"n", n}, {"count", count}, {"ell", ell}, {"exception", nullptr}};
  if (count == 0) {
    ExceptionRecord rec = classify_exception(family, n);
    out["exception"] = json{{"ell", rec.ell}, {"square_class_3", rec.square_class_3}};
  }
  if (want_json(opt)) {
    std::cout << out.dump() << "\n";
  } else if (want_csv(opt)) {
    return reject_csv("represent");
  } else {
    std::cout << "m=" << m << " n=" << n << " count=" << count << " ell=" << ell;
    if (count == 0) {
      std::cout << " exceptional"
                << (out["exception"]["square_class_3"].get<bool>() ? " square_class_3"
                                                                   : " non_square_class");
    }
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_exceptions(const Options& opt, std::int64_t m, std::int64_t bound) {
  PolygonalFamily family(m);
  SurveyReport s = survey(family, bound, opt.threads);
  if (want_json(opt)) {
    std::cout << to_json(s) << "\n";
  } else if (want_csv(opt)) {
    std::cout << to_csv(s);
  } else {
    for (const auto& rec : s.exceptions) {
      std::cout << rec.n << " (ell=" << rec.ell
                << (rec.square_class_3 ? ", square_class_3" : "") << ")\n";
    }
    std::cout << "total " << s.exceptions.size() << " exceptions <= " << bound << "\n";
  }
  return kExitOk;
}

int cmd_theta(const Options& opt, std::int64_t m, std::int64_t bound) {
  CosetZ3 coset = coset_for(PolygonalFamily(m));
  QSeries t = theta_series(coset, bound, opt.threads);
  if (want_json(opt)) {
    std::cout << to_json(t) << "\n";
  } else if (want_csv(opt)) {
    std::cout << to_csv(t);
  } else {
    std::cout << "coset (" << coset.residues[0] << "," << coset.residues[1] << ","
              << coset.residues[2] << ") mod " << coset.modulus << "\n";
    for (const auto& [e, v] : t.terms()) std::cout << e << ": " << to_string(v) << "\n";
  }
  return kExitOk;
}

int cmd_verify_siegel_weil(const Options& opt, std::int64_t bound) {
  SiegelWeilReport r = verify_siegel_weil(bound, opt.threads);
  if (want_json(opt)) {
    std::cout << to_json(r) << "\n";
  } else if (want_csv(opt)) {
    return reject_csv("verify-siegel-weil");
  } else {
    std::cout << "spinor(+) == genus - (1/8) theta_{1,3,12}: "
              << (r.plus_identity_holds ? "verified" : "FAILED") << "\n";
    std::cout << "spinor(-) == genus + (1/8) theta_{1,3,12}: "
              << (r.minus_identity_holds ? "verified" : "FAILED") << "\n";
    if (r.plus_mismatch) {
      std::cout << "first + mismatch at " << r.plus_mismatch->exponent << ": "
                << to_string(r.plus_mismatch->lhs) << " vs "
                << to_string(r.plus_mismatch->rhs) << "\n";
    }
    if (r.minus_mismatch) {
      std::cout << "first - mismatch at " << r.minus_mismatch->exponent << ": "
                << to_string(r.minus_mismatch->lhs) << " vs "
                << to_string(r.minus_mismatch->rhs) << "\n";
    }
    std::cout << (bound + 1) << " coefficients checked (exponents 0.." << bound << ")\n";
  }
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_hurwitz(const Options& opt, std::int64_t d) {
  Rational h = hurwitz(d);
  if (want_json(opt)) {
    std::cout << json{{"d", d}, {"hurwitz", to_string(h)}}.dump() << "\n";
  } else if (want_csv(opt)) {
    return reject_csv("hurwitz");
  } else {
    std::cout << to_string(h) << "\n";
  }
  return kExitOk;
}

int cmd_class_number(const Options& opt, std::int64_t D) {
  std::int64_t h = class_number(Discriminant(D));
  if (want_json(opt)) {
    std::cout << json{{"D", D}, {"class_number", h}}.dump() << "\n";
  } else if (want_csv(opt)) {
    return reject_csv("class-number");
  } else {
    std::cout << h << "\n";
  }
  return kExitOk;
}

int cmd_witnesses(const Options& opt, std::int64_t m, int count, std::int64_t ceiling) {
  std::vector<WitnessReport> w;
  try {
    w = find_witnesses(m, count, ceiling);
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  if (want_json(opt)) {
    std::cout << to_json(w) << "\n";
  } else if (want_csv(opt)) {
    std::cout << to_csv(w);
  } else {
    for (const auto& rep : w) {
      std::cout << "ell=" << rep.ell << " n=" << rep.n
                << (rep.verified ? " verified" : " UNVERIFIED") << "\n";
    }
  }
  for (const auto& rep : w) {
    if (!rep.verified) return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_survey(const Options& opt, std::int64_t m, std::int64_t bound) {
  SurveyReport s = survey(PolygonalFamily(m), bound, opt.threads);
  if (want_json(opt)) {
    std::cout << to_json(s) << "\n";
  } else if (want_csv(opt)) {
    std::cout << to_csv(s);
  } else {
    std::cout << "m=" << m << " bound=" << bound << ": " << s.exceptions.size()
              << " exceptions, " << s.square_class_count << " in the square class 3Z^2\n";
    if (s.largest_non_square_class) {
      std::cout << "largest exception outside the square class: "
                << *s.largest_non_square_class << "\n";
    } else {
      std::cout << "no exception outside the square class\n";
    }
  }
  return kExitOk;
}

int cmd_local(const Options& opt, std::int64_t m, std::optional<std::int64_t> n) {
  auto obstruction = mod8_obstruction(m);
  ObstructionReport rep = obstruction_report(m, 8);
  const bool quad = (m % 4 == 0);
  json out{{"m", m},
           {"polygonal_residues_mod_8", polygonal_residues(m, 8)},
           {"sum_residues_mod_8", sum_residues(m, 8)},
           {"missing_mod_8", rep.missing_residues},
           {"mod8_obstruction", obstruction ? json(*obstruction) : json(nullptr)},
           {"two_adic_surjective_k12", quad ? json(nullptr) : json(two_adic_surjective(m, 12))},
           {"n", nullptr},
           {"locally_admissible", nullptr}};
  if (n) {
    out["n"] = *n;
    out["locally_admissible"] = locally_admissible(m, *n);
  }
  if (want_json(opt)) {
    std::cout << out.dump() << "\n";
  } else if (want_csv(opt)) {
    return reject_csv("local");
  } else {
    std::cout << "p_" << m << " residues mod 8:";
    for (auto r : polygonal_residues(m, 8)) std::cout << " " << r;
    std::cout << "\ntriple-sum residues mod 8:";
    for (auto r : sum_residues(m, 8)) std::cout << " " << r;
    std::cout << "\n";
    if (obstruction)
      std::cout << "square-class obstruction: " << *obstruction << " (mod 8)\n";
    else
      std::cout << "no mod-8 obstruction\n";
    if (!quad)
      std::cout << "p_" << m << " surjective mod 2^12: "
                << (two_adic_surjective(m, 12) ? "yes" : "no") << "\n";
    if (n)
      std::cout << "locally admissible n=" << *n << ": "
                << (locally_admissible(m, *n) ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_probe(const Options& opt, std::int64_t bound) {
  SieveIdentityReport r = sieve_identity_probe(bound);
  if (want_json(opt)) {
    std::cout << to_json(r) << "\n";
  } else if (want_csv(opt)) {
    return reject_csv("probe-sieve-identity");
  } else {
    std::cout << "residual R = Theta^3|S_{24,3} - 48*(weighted coset sum), exponents <= "
              << bound << "\n";
    std::cout << "printed closed form 8*Theta^3(3tau)|S_{24,3}: "
              << (r.printed_term_matches ? "matches" : "does NOT match");
    if (r.printed_mismatch) {
      std::cout << " (first mismatch at " << r.printed_mismatch->exponent << ": R="
                << to_string(r.printed_mismatch->lhs) << " vs "
                << to_string(r.printed_mismatch->rhs) << ")";
    }
    std::cout << "\n";
    std::cout << "dilation form Theta^3(9tau)|S_{24,3}: "
              << (r.dilate9_term_matches ? "matches identically" : "does NOT match");
    if (r.dilate9_mismatch) {
      std::cout << " (first mismatch at " << r.dilate9_mismatch->exponent << ")";
    }
    std::cout << "\n";
  }
  return r.definitive() ? kExitOk : kExitVerificationFailed;
}

int cmd_theorem52(const Options& opt, std::int64_t prime_bound) {
  Theorem52Report r = theorem52_scan(prime_bound);
  if (want_json(opt)) {
    std::cout << to_json(r) << "\n";
  } else if (want_csv(opt)) {
    return reject_csv("theorem52");
  } else {
    std::cout << r.checked_1_mod_12.size() << " primes = 1 (mod 12) and "
              << r.checked_7_mod_12.size() << " primes = 7 (mod 12) checked up to "
              << prime_bound << "\n";
    for (const auto& v : r.violations)
      std::cout << "VIOLATION at ell=" << v.ell << " count=" << v.count << "\n";
    std::cout << (r.ok() ? "no violations" : "violations found") << "\n";
  }
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_sturm(const Options& opt, std::int64_t N) {
  const std::int64_t index = sturm_index(N);
  const Rational count = weight32_coefficient_count(N);
  if (want_json(opt)) {
    std::cout << json{{"N", N}, {"index", index}, {"weight32_count", to_string(count)}}.dump()
              << "\n";
  } else if (want_csv(opt)) {
    return reject_csv("sturm");
  } else {
    std::cout << "index " << index << ", weight-3/2 coefficient count " << to_string(count)
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sums of three generalized m-gonal numbers: representation counts, "
               "exceptional sets, theta identities"};
  app.require_subcommand(1);
  app.fallthrough();  // --format/--threads may follow the subcommand

  Options opt;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--threads", opt.threads, "worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::int64_t m = 0, n = 0, bound = 0, d = 0, D = 0, N = 0, prime_bound = 0;
  std::int64_t ceiling = 1000000;
  std::int64_t sw_bound = 27648;
  int count = 0;
  std::optional<std::int64_t> local_n;

  auto* represent = app.add_subcommand("represent", "count representations of n by P_m");
  represent->add_option("m", m, "polygon order (>= 3)")->required();
  represent->add_option("n", n, "target integer")->required();

  auto* exceptions = app.add_subcommand("exceptions", "list unrepresented n <= bound");
  exceptions->add_option("m", m)->required();
  exceptions->add_option("bound", bound)->required();

  auto* theta = app.add_subcommand("theta", "theta series of the coset attached to m");
  theta->add_option("m", m)->required();
  theta->add_option("bound", bound, "truncation of the exponent")->required();

  auto* vsw = app.add_subcommand("verify-siegel-weil",
                                 "exact spinor-genus mass identities for m=14");
  vsw->add_option("--bound", sw_bound, "largest exponent checked")->capture_default_str();

  auto* hur = app.add_subcommand("hurwitz", "Hurwitz class number H(d)");
  hur->add_option("d", d)->required();

  auto* cls = app.add_subcommand("class-number", "class number h(D), D < 0");
  cls->add_option("D", D)->required();

  auto* wit = app.add_subcommand("witnesses", "verified unrepresented families, m = 2 (mod 12)");
  wit->add_option("m", m)->required();
  wit->add_option("count", count)->required();
  wit->add_option("--prime-ceiling", ceiling)->capture_default_str();

  auto* sur = app.add_subcommand("survey", "exceptional-set survey with square-class split");
  sur->add_option("m", m)->required();
  sur->add_option("bound", bound)->required();

  auto* loc = app.add_subcommand("local", "congruence-level analysis of P_m");
  loc->add_option("m", m)->required();
  loc->add_option("n", local_n, "test local admissibility of n");

  auto* probe = app.add_subcommand("probe-sieve-identity",
                                   "residual probe for the sieved Theta^3 identity");
  probe->add_option("bound", bound)->required();

  auto* t52 = app.add_subcommand("theorem52", "scan coset non-representation at 3*ell^2");
  t52->add_option("prime_bound", prime_bound)->required();

  auto* sturm = app.add_subcommand("sturm", "index of Gamma_1(N) and the weight-3/2 count");
  sturm->add_option("N", N)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or the parse error
    return (e.get_name() == "CallForHelp") ? kExitOk : kExitBadInput;
  }

  try {
    if (represent->parsed()) return cmd_represent(opt, m, n);
    if (exceptions->parsed()) return cmd_exceptions(opt, m, bound);
    if (theta->parsed()) return cmd_theta(opt, m, bound);
    if (vsw->parsed()) return cmd_verify_siegel_weil(opt, sw_bound);
    if (hur->parsed()) return cmd_hurwitz(opt, d);
    if (cls->parsed()) return cmd_class_number(opt, D);
    if (wit->parsed()) return cmd_witnesses(opt, m, count, ceiling);
    if (sur->parsed()) return cmd_survey(opt, m, bound);
    if (loc->parsed()) return cmd_local(opt, m, local_n);
    if (probe->parsed()) return cmd_probe(opt, bound);
    if (t52->parsed()) return cmd_theorem52(opt, prime_bound);
    if (sturm->parsed()) return cmd_sturm(opt, N);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitBadInput;
}
