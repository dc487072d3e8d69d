#include "catcube/dixon.hpp"

#include <sstream>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace catcube {

namespace {

std::string digits15(const WideFloat& x) {
  std::ostringstream os;
  os.precision(15);
  os.setf(std::ios::showpoint);
  os << x;
  return os.str();
}

}  // namespace

WideFloat gamma_quarter_agm() {
  using boost::multiprecision::sqrt;
  WideFloat a = 1;
  WideFloat b = sqrt(WideFloat(2));
  const WideFloat eps = std::numeric_limits<WideFloat>::epsilon();
  while (abs(a - b) > eps * a) {
    const WideFloat mean = (a + b) / 2;
    b = sqrt(a * b);
    a = mean;
  }
  const WideFloat two_pi = 2 * boost::math::constants::pi<WideFloat>();
  return sqrt(two_pi * sqrt(two_pi) / a);
}

WideFloat catalan_cube_partial_sum(unsigned long terms) {
  if (terms == 0) throw std::invalid_argument("catalan_cube_partial_sum: terms must be >= 1");
  // t_{k+1} / t_k = ((2k+1)/(2k+4))^3
  WideFloat term = 1;
  WideFloat sum = 0;
  for (unsigned long k = 0; k < terms; ++k) {
    sum += term;
    const WideFloat r = WideFloat(2 * k + 1) / WideFloat(2 * k + 4);
    term *= r * r * r;
  }
  return sum;
}

WideFloat catalan_cube_closed_form() {
  const WideFloat g = gamma_quarter_agm();
  const WideFloat g2 = g * g;
  return 8 - 384 * boost::math::constants::pi<WideFloat>() / (g2 * g2);
}

WideFloat catalan_cube_tail_bound(unsigned long terms) {
  using boost::multiprecision::pow;
  const WideFloat n = terms == 0 ? 1 : terms;
  const WideFloat head = terms == 0 ? WideFloat(1) : WideFloat(0);  // k = 0 term is 1
  const WideFloat pi = boost::math::constants::pi<WideFloat>();
  // sum_{k>=n} (pi k)^{-3/2} (k+1)^{-3} <= pi^{-3/2} (n^{-9/2} + n^{-7/2} / (7/2))
  const WideFloat bound = (pow(n, WideFloat(-4.5)) + pow(n, WideFloat(-3.5)) / WideFloat(3.5)) / pow(pi, WideFloat(1.5));
  return head + bound;
}

DixonResult dixon_float_check(unsigned long terms, double tolerance) {
  if (terms == 0) throw std::invalid_argument("dixon_float_check: terms must be >= 1");
  const WideFloat partial = catalan_cube_partial_sum(terms);
  const WideFloat closed = catalan_cube_closed_form();
  const WideFloat diff = abs(partial - closed);
  return {terms,
          tolerance,
          digits15(partial),
          digits15(closed),
          diff.convert_to<double>(),
          catalan_cube_tail_bound(terms).convert_to<double>(),
          diff <= WideFloat(tolerance)};
}

}  // namespace catcube
