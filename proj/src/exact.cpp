#include "catcube/exact.hpp"

#include <stdexcept>

namespace catcube {

BigRational::BigRational(const BigInt& num, const BigInt& den) : q_(num, den) {
  if (sgn(den) == 0) throw std::domain_error("BigRational: zero denominator");
  q_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  q_ /= o.q_;
  return *this;
}

std::string BigRational::to_string() const { return q_.get_str(10); }

BigRational pow(const BigRational& base, unsigned exponent) {
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(), exponent);
  return {num, den};
}

BigInt ipow(long base, unsigned exponent) {
  BigInt r = base;
  mpz_pow_ui(r.get_mpz_t(), r.get_mpz_t(), exponent);
  return r;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt catalan(unsigned k) {
  BigInt c = binomial(2L * k, k);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), k + 1UL);
  return c;
}

BigRational harmonic(unsigned k, unsigned r) {
  // Common-denominator accumulation: sum of L/j^r over L = lcm(j^r).
  BigInt lcm = 1;
  std::vector<BigInt> powers;
  powers.reserve(k);
  for (unsigned j = 1; j <= k; ++j) {
    powers.push_back(ipow(j, r));
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), powers.back().get_mpz_t());
  }
  BigInt num = 0;
  for (const auto& pw : powers) num += lcm / pw;
  return {num, lcm};
}

BigInt EulerTable::at(unsigned n) const {
  if (n > max_index()) throw std::out_of_range("EulerTable: index beyond table");
  if (n % 2 != 0) return 0;
  return values_[n / 2];
}

EulerTable euler_numbers(unsigned max_index) {
  if (max_index % 2 != 0) throw std::invalid_argument("euler_numbers: max_index must be even");
  std::vector<BigInt> e;
  e.reserve(max_index / 2 + 1);
  e.emplace_back(1);
  for (unsigned n = 1; 2 * n <= max_index; ++n) {
    BigInt acc = 0;
    for (unsigned j = 0; j < n; ++j) acc += binomial(2L * n, 2L * j) * e[j];
    e.push_back(-acc);
  }
  return EulerTable(std::move(e));
}

GouldTerm gould_term(unsigned n, unsigned k, unsigned j) {
  if (k > n) throw std::invalid_argument("gould_term: k > n");
  GouldTerm t{n, k, j, 0};
  t.value = binomial(n, k) * binomial(static_cast<long>(n) + k, k) *
            binomial(2L * k, static_cast<long>(k) + j) * ipow(-4, n - k);
  return t;
}

BigRational catalan_power_sum(unsigned n, unsigned d) {
  if (d == 0) throw std::invalid_argument("catalan_power_sum: d must be positive");
  // All terms share the denominator 4^(d n): accumulate integers.
  BigInt num = 0;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt term;
    mpz_pow_ui(term.get_mpz_t(), catalan(k).get_mpz_t(), d);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), 2UL * d * (n - k));
    num += term;
  }
  BigInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), 2UL * d * n);
  return {num, den};
}

BigRational q_weighted_gould_sum(std::span<const long> q_coeffs, unsigned n, unsigned denom_power) {
  BigRational sum;
  for (unsigned k = 0; k <= n; ++k) {
    BigInt qk = 0;
    for (auto it = q_coeffs.rbegin(); it != q_coeffs.rend(); ++it) qk = qk * k + *it;
    if (sgn(qk) == 0) continue;
    const BigInt num = qk * binomial(n, k) * binomial(static_cast<long>(n) + k, k) * binomial(2L * k, k);
    const BigInt den = ipow(-4, k) * ipow(static_cast<long>(k) + 1, denom_power);
    sum += BigRational(num, den);
  }
  return sum;
}

}  // namespace catcube
