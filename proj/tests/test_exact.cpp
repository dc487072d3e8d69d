#include <doctest.h>

#include <vector>

#include "catcube/exact.hpp"

using namespace catcube;

namespace {

BigRational q(long num, long den = 1) { return {BigInt(num), BigInt(den)}; }

// Pascal's triangle by repeated addition.
std::vector<std::vector<BigInt>> pascal(unsigned rows) {
  std::vector<std::vector<BigInt>> t(rows + 1);
  for (unsigned n = 0; n <= rows; ++n) {
    t[n].assign(n + 1, BigInt(1));
    for (unsigned k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
  }
  return t;
}

// E_{2n} from sec x = 1 / cos x: invert the cosine power series over Q,
// then E_{2n} = (-1)^n (2n)! [x^{2n}] sec x.
std::vector<BigInt> euler_by_secant_series(unsigned count) {
  std::vector<mpq_class> cos_c(count), sec_c(count);
  mpz_class fact = 1;
  for (unsigned n = 0; n < count; ++n) {
    if (n > 0) fact *= (2 * n - 1) * (2 * n);
    cos_c[n] = mpq_class((n % 2 == 0) ? 1 : -1, 1) / mpq_class(fact);
  }
  for (unsigned n = 0; n < count; ++n) {
    mpq_class acc = (n == 0) ? 1 : 0;
    for (unsigned j = 1; j <= n; ++j) acc -= cos_c[j] * sec_c[n - j];
    sec_c[n] = acc;  // cos_c[0] == 1
  }
  std::vector<BigInt> out;
  fact = 1;
  for (unsigned n = 0; n < count; ++n) {
    if (n > 0) fact *= (2 * n - 1) * (2 * n);
    mpq_class v = sec_c[n] * fact;
    if (n % 2 == 1) v = -v;
    out.push_back(v.get_num());
  }
  return out;
}

BigRational power_sum_oracle(unsigned n, unsigned d) {
  mpq_class s = 0;
  for (unsigned k = 0; k <= n; ++k) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
    mpq_class t(c, mpz_class(k + 1));
    t.canonicalize();
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    t /= four_k;
    mpq_class tp = 1;
    for (unsigned i = 0; i < d; ++i) tp *= t;
    s += tp;
  }
  return {s.get_num(), s.get_den()};
}

}  // namespace

TEST_CASE("BigRational is kept in canonical form") {
  const BigRational x(BigInt(6), BigInt(-4));
  CHECK(x.numerator() == -3);
  CHECK(x.denominator() == 2);
  CHECK(x == q(-3, 2));
  CHECK(x.to_string() == "-3/2");
  CHECK(q(4, 2).to_string() == "2");
  CHECK(q(1, 3) + q(1, 6) == q(1, 2));
  CHECK(q(2, 3) * q(3, 4) == q(1, 2));
  CHECK(q(1, 2) < q(2, 3));
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK_THROWS_AS(q(1) / q(0), std::domain_error);
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(0, 2) == 0);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-3, 1) == 0);

  const auto t = pascal(60);
  for (unsigned n = 0; n <= 60; ++n)
    for (unsigned k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == t[n][k]);
}

TEST_CASE("catalan") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(3) == 5);
  CHECK(catalan(5) == 42);
  for (unsigned k = 0; k <= 60; ++k) CHECK(catalan(k) * (k + 1) == binomial(2L * k, k));
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(0, 2) == q(0));
  CHECK(harmonic(2, 2) == q(5, 4));
  CHECK(harmonic(3, 1) == q(11, 6));
  for (unsigned r = 1; r <= 3; ++r) {
    BigRational naive;
    for (unsigned k = 1; k <= 40; ++k) {
      naive += BigRational(BigInt(1), ipow(k, r));
      REQUIRE(harmonic(k, r) == naive);
    }
  }
}

TEST_CASE("Euler numbers") {
  CHECK(euler_numbers(0).even_values().size() == 1);
  CHECK(euler_numbers(0).at(0) == 1);

  const auto e2 = euler_numbers(2);
  CHECK(e2.at(0) == 1);
  CHECK(e2.at(2) == -1);

  const auto e6 = euler_numbers(6);
  const std::vector<BigInt> expected = {1, -1, 5, -61};
  REQUIRE(e6.even_values().size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(e6.even_values()[i] == expected[i]);
  CHECK(e6.at(3) == 0);
  CHECK(e6.max_index() == 6);
  CHECK_THROWS_AS(e6.at(8), std::out_of_range);
  CHECK_THROWS_AS(euler_numbers(3), std::invalid_argument);

  SUBCASE("matches the secant power series") {
    const auto table = euler_numbers(60);
    const auto oracle = euler_by_secant_series(31);
    for (unsigned i = 0; i <= 30; ++i) CHECK(table.at(2 * i) == oracle[i]);
    CHECK(table.at(8) == 1385);
  }

  SUBCASE("recurrence sum vanishes at every level") {
    const auto table = euler_numbers(60);
    for (unsigned n = 1; 2 * n <= 60; ++n) {
      BigInt s = 0;
      for (unsigned j = 0; j <= n; ++j) s += binomial(2L * n, 2L * j) * table.at(2 * j);
      CHECK(s == 0);
    }
  }
}

TEST_CASE("Gould term") {
  CHECK(gould_term(1, 0, 0).value == -4);
  CHECK(gould_term(1, 1, 0).value == 4);
  CHECK(gould_term(2, 1, 1).value == -24);
  CHECK(gould_term(0, 0, 2).value == 0);
  CHECK_THROWS_AS(gould_term(2, 3, 0), std::invalid_argument);

  for (unsigned n = 0; n <= 40; ++n)
    for (unsigned k = 0; k <= n; ++k)
      for (unsigned j = 0; j <= 2; ++j) {
        const auto t = gould_term(n, k, j);
        if (binomial(2L * k, static_cast<long>(k) + j) == 0) {
          REQUIRE(t.value == 0);
        } else {
          REQUIRE(sgn(t.value) == ((n - k) % 2 == 0 ? 1 : -1));
        }
      }
}

TEST_CASE("catalan_power_sum") {
  CHECK(catalan_power_sum(0, 3) == q(1));
  CHECK(catalan_power_sum(2, 1) == q(11, 8));
  // 1 + 1/64 + 8/4096
  CHECK(catalan_power_sum(2, 3) == q(521, 512));
  CHECK(power_sum_oracle(2, 3) == q(521, 512));
  for (unsigned d = 1; d <= 3; ++d)
    for (unsigned n = 0; n <= 30; ++n) REQUIRE(catalan_power_sum(n, d) == power_sum_oracle(n, d));
  CHECK_THROWS_AS(catalan_power_sum(3, 0), std::invalid_argument);
}

TEST_CASE("closed forms for d = 1, 2 up to n = 500") {
  for (unsigned n = 0; n <= 500; ++n) {
    const BigInt b = binomial(2L * n + 1, n);
    REQUIRE(catalan_power_sum(n, 1) == BigRational(2L) - BigRational(b, ipow(4, n)));
    REQUIRE(catalan_power_sum(n, 2) == BigRational(-4L) + BigRational(BigInt(5 + 4L * n) * b * b, ipow(16, n)));
  }
}

TEST_CASE("q_weighted_gould_sum") {
  const long one[] = {1};
  const long cube[] = {0, 0, 0, 1};
  CHECK(q_weighted_gould_sum(one, 1, 1) == q(1, 2));
  CHECK(q_weighted_gould_sum(one, 1, 3) == q(7, 8));
  CHECK(q_weighted_gould_sum(cube, 1, 0) == q(-1));
  CHECK(q_weighted_gould_sum(one, 2, 1) == q(1, 4));

  SUBCASE("linear in Q") {
    const long a[] = {3, -1, 2};
    const long b[] = {0, 5, 0, -7};
    const long sum[] = {3, 4, 2, -7};
    for (unsigned n = 0; n <= 12; ++n)
      for (unsigned pw = 0; pw <= 3; ++pw)
        CHECK(q_weighted_gould_sum(a, n, pw) + q_weighted_gould_sum(b, n, pw) == q_weighted_gould_sum(sum, n, pw));
  }
}
