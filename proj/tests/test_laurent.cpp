#include "doctest.h"
#include "oracles.hpp"
#include "platkit/laurent.hpp"

using platkit::LaurentPoly;
using platkit::unit_ratio;

TEST_CASE("Laurent arithmetic") {
  const LaurentPoly d = LaurentPoly::delta();
  CHECK(d == oracle::poly({{2, -1}, {-2, -1}}));
  CHECK(d.to_string() == "-A^2 - A^-2");
  CHECK((d * d) == oracle::poly({{4, 1}, {0, 2}, {-4, 1}}));
  CHECK(d.pow(0) == LaurentPoly::constant(1));
  CHECK((d - d).is_zero());
  CHECK((d - d).to_string() == "0");
  CHECK(LaurentPoly::monomial(3, -1).shifted(2) == LaurentPoly::monomial(3, 1));
  CHECK(oracle::poly({{3, -1}, {-1, -1}}).to_string() == "-A^3 - A^-1");
  CHECK(LaurentPoly::constant(-2).to_string() == "-2");
  CHECK(oracle::poly({{1, 1}, {0, 5}}).to_string() == "A + 5");
}

TEST_CASE("unit ratio") {
  const LaurentPoly d = LaurentPoly::delta();
  const auto u = unit_ratio((-d).shifted(7), d);
  REQUIRE(u);
  CHECK(u->sign == -1);
  CHECK(u->shift == 7);
  CHECK_FALSE(unit_ratio(d * d, d));
  CHECK_FALSE(unit_ratio(LaurentPoly(), d));
  CHECK(unit_ratio(LaurentPoly(), LaurentPoly()));
}

TEST_CASE("Laurent overflow is reported") {
  const LaurentPoly big = LaurentPoly::constant(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * LaurentPoly::constant(4), std::overflow_error);
}
