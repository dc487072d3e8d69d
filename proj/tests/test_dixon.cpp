#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>

#include "catcube/dixon.hpp"

using namespace catcube;

TEST_CASE("Gamma(1/4) by AGM matches the Lanczos/series gamma") {
  const WideFloat agm = gamma_quarter_agm();
  const WideFloat reference = boost::math::tgamma(WideFloat(1) / 4);
  CHECK(abs(agm - reference) < WideFloat("1e-45"));
  CHECK(abs(agm - WideFloat("3.6256099082219083119306851558676720029951676828800654674")) < WideFloat("1e-45"));
}

TEST_CASE("closed form value") {
  const WideFloat closed = catalan_cube_closed_form();
  const WideFloat g = boost::math::tgamma(WideFloat(1) / 4);
  const WideFloat oracle = 8 - 384 * boost::math::constants::pi<WideFloat>() / (g * g * g * g);
  CHECK(abs(closed - oracle) < WideFloat("1e-45"));
  CHECK(abs(closed - WideFloat("1.01837051819189616745754162419549363233")) < WideFloat("1e-38"));
}

TEST_CASE("partial sums") {
  CHECK(catalan_cube_partial_sum(1) == 1);
  // 1 + 1/64 + 8/4096
  CHECK(abs(catalan_cube_partial_sum(3) - WideFloat(521) / 512) < WideFloat("1e-45"));
  CHECK_THROWS_AS(catalan_cube_partial_sum(0), std::invalid_argument);
}

TEST_CASE("tail bound dominates the actual tail") {
  const WideFloat limit = catalan_cube_closed_form();
  for (unsigned long terms : {1UL, 2UL, 10UL, 100UL, 1000UL}) {
    const WideFloat tail = limit - catalan_cube_partial_sum(terms);
    CHECK(tail > 0);
    CHECK(tail <= catalan_cube_tail_bound(terms));
  }
}

TEST_CASE("dixon_float_check") {
  const auto fine = dixon_float_check(100000, 1e-10);
  CHECK(fine.pass);
  CHECK(fine.partial_sum.rfind("1.01837051819190", 0) == 0);
  CHECK(fine.closed_form.rfind("1.01837051819190", 0) == 0);
  CHECK(fine.difference < 1e-10);
  CHECK(fine.tail_bound < 1e-17);

  CHECK(dixon_float_check(1, 10).pass);
  const auto coarse = dixon_float_check(1, 1e-10);
  CHECK_FALSE(coarse.pass);
  CHECK(coarse.difference == doctest::Approx(0.0183705).epsilon(0.01));
}
