#include <doctest.h>

#include "polysum/io.hpp"
#include "polysum/spinor_m14.hpp"

using namespace polysum;

TEST_SUITE("io") {

TEST_CASE("qseries csv round trip") {
  QSeries g = genus_theta(300);
  QSeries back = qseries_from_csv(to_csv(g));
  CHECK(back.bound() == g.bound());
  CHECK(equal_up_to(back, g, g.bound()));
}

TEST_CASE("qseries json round trip") {
  QSeries g = scale(genus_theta(300), make_rational(-7, 5));
  QSeries back = qseries_from_json(to_json(g));
  CHECK(back.bound() == g.bound());
  CHECK(equal_up_to(back, g, g.bound()));
}

TEST_CASE("csv carries exact strings") {
  QSeries s(10, {{3, make_rational(-5, 8)}});
  std::string csv = to_csv(s);
  CHECK(csv.find("# bound=10") != std::string::npos);
  CHECK(csv.find("3,-5,8") != std::string::npos);
}

TEST_CASE("report serializers emit valid cross-checked fields") {
  SiegelWeilReport r = verify_siegel_weil(300);
  std::string j = to_json(r);
  CHECK(j.find("\"ok\":true") != std::string::npos);
  CHECK(j.find("\"bound\":300") != std::string::npos);

  SieveIdentityReport p = sieve_identity_probe(200);
  std::string pj = to_json(p);
  CHECK(pj.find("\"dilate9_term_matches\":true") != std::string::npos);
  CHECK(pj.find("\"printed_term_matches\":false") != std::string::npos);
}

}  // TEST_SUITE
