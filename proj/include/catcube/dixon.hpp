#pragma once

#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace catcube {

/// 50 significant decimal digits.
using WideFloat = boost::multiprecision::cpp_bin_float_50;

/// Gamma(1/4) from the lemniscate relation Gamma(1/4)^2 = (2 pi)^{3/2} / AGM(1, sqrt 2).
WideFloat gamma_quarter_agm();

/// sum_{k=0}^{terms-1} C_k^3 / 64^k.
WideFloat catalan_cube_partial_sum(unsigned long terms);

/// 8 - 384 pi / Gamma(1/4)^4.
WideFloat catalan_cube_closed_form();

/// Upper bound on sum_{k>=terms} C_k^3/64^k from C_k/4^k <= 1/(sqrt(pi k)(k+1)).
WideFloat catalan_cube_tail_bound(unsigned long terms);

struct DixonResult {
  unsigned long terms;
  double tolerance;
  std::string partial_sum;  // 15 significant digits
  std::string closed_form;
  double difference;        // |partial_sum - closed_form|
  double tail_bound;
  bool pass;
};

/// Passes iff the partial sum is within `tolerance` of the closed form.
DixonResult dixon_float_check(unsigned long terms, double tolerance);

}  // namespace catcube
