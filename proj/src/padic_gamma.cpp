#include "catcube/padic_gamma.hpp"

#include <vector>

namespace catcube {

namespace {

// Polynomial in the run offset with coefficients mod p^m, truncated to degree < m.
class TruncatedPoly {
 public:
  TruncatedPoly(const BigInt& pm, unsigned degree_bound)
      : pm_(&pm), coeffs_(degree_bound, BigInt(0)) {
    coeffs_[0] = 1;
  }

  // *this *= (x + c)
  void mul_linear(const BigInt& c) {
    for (std::size_t s = coeffs_.size(); s-- > 0;) {
      BigInt v = coeffs_[s] * c;
      if (s > 0) v += coeffs_[s - 1];
      coeffs_[s] = reduce(v);
    }
  }

  void mul(const TruncatedPoly& o) {
    const std::size_t len = coeffs_.size();
    std::vector<BigInt> out(len, BigInt(0));
    for (std::size_t a = 0; a < len; ++a) {
      if (sgn(coeffs_[a]) == 0) continue;
      for (std::size_t b = 0; a + b < len; ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
    }
    for (auto& v : out) v = reduce(v);
    coeffs_ = std::move(out);
  }

  // T(x + c) as a polynomial in x.
  [[nodiscard]] TruncatedPoly shifted(const BigInt& c) const {
    const std::size_t len = coeffs_.size();
    TruncatedPoly out(*pm_, static_cast<unsigned>(len));
    out.coeffs_[0] = 0;
    std::vector<BigInt> cpow(len, BigInt(1));
    for (std::size_t i = 1; i < len; ++i) cpow[i] = reduce(cpow[i - 1] * c);
    for (std::size_t t = 0; t < len; ++t) {
      if (sgn(coeffs_[t]) == 0) continue;
      for (std::size_t s = 0; s <= t; ++s)
        out.coeffs_[s] += coeffs_[t] * binomial(static_cast<long>(t), static_cast<long>(s)) * cpow[t - s];
    }
    for (auto& v : out.coeffs_) v = reduce(v);
    return out;
  }

  [[nodiscard]] BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t s = coeffs_.size(); s-- > 0;) acc = reduce(acc * x + coeffs_[s]);
    return acc;
  }

 private:
  [[nodiscard]] BigInt reduce(const BigInt& v) const {
    BigInt r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), pm_->get_mpz_t());
    return r;
  }

  const BigInt* pm_;
  std::vector<BigInt> coeffs_;
};

}  // namespace

ResidueClass gamma_p_int(const BigInt& n, const Modulus& mod) {
  if (sgn(n) < 0) throw std::invalid_argument("gamma_p_int: n must be non-negative");
  const std::uint64_t p = mod.p();
  const BigInt& pm = mod.pm();

  std::vector<unsigned long> digits;  // base-p, least significant first
  for (BigInt rest = n; sgn(rest) != 0;) {
    digits.push_back(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), p));
  }

  // runs[j] = prod over a run of p^j integers, j >= 1; runs[0] unused.
  std::vector<TruncatedPoly> runs;
  runs.reserve(digits.size());
  runs.emplace_back(pm, mod.m());
  if (digits.size() > 1) {
    TruncatedPoly first(pm, mod.m());
    for (std::uint64_t i = 1; i < p; ++i) first.mul_linear(BigInt(static_cast<unsigned long>(i)));
    runs.push_back(std::move(first));
    BigInt step = static_cast<unsigned long>(p);
    for (std::size_t j = 2; j < digits.size(); ++j) {
      TruncatedPoly next(pm, mod.m());
      for (std::uint64_t b = 0; b < p; ++b) next.mul(runs[j - 1].shifted(step * static_cast<unsigned long>(b)));
      runs.push_back(std::move(next));
      step *= static_cast<unsigned long>(p);
    }
  }

  BigInt acc = 1;
  BigInt start = 0;
  for (std::size_t j = digits.size(); j-- > 1;) {
    BigInt run_len;
    mpz_ui_pow_ui(run_len.get_mpz_t(), p, j);
    for (unsigned long b = 0; b < digits[j]; ++b) {
      acc = acc * runs[j].eval(start) % pm;
      start += run_len;
    }
  }
  if (!digits.empty()) {
    // start is a multiple of p here, so only start itself is skipped.
    for (unsigned long i = 1; i < digits[0]; ++i) acc = acc * (start + i) % pm;
  }
  if (mpz_odd_p(n.get_mpz_t())) acc = -acc;
  return {mod, acc};
}

ResidueClass gamma_p_int_direct(std::uint64_t n, const Modulus& mod) {
  const std::uint64_t p = mod.p();
  BigInt acc = 1;
  for (std::uint64_t k = 1; k < n; ++k) {
    if (k % p == 0) continue;
    acc *= static_cast<unsigned long>(k);
    mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), mod.pm().get_mpz_t());
  }
  if (n % 2 == 1) acc = -acc;
  return {mod, acc};
}

ResidueClass gamma_p(const GammaRequest& req) {
  const Modulus working = req.modulus.with_exponent(req.modulus.m() + req.guard_digits);
  BigInt representative;
  try {
    representative = residue_of_rational(req.argument, working).value();
  } catch (const DenominatorDivisibleByP&) {
    throw ArgumentNotPAdicInteger("gamma_p: " + req.argument.to_string() + " is not a " +
                                  std::to_string(req.modulus.p()) + "-adic integer");
  }
  return reduce_precision(gamma_p_int(representative, working), req.modulus.m());
}

ResidueClass gamma_quarter_pow4(std::uint64_t p, unsigned m, unsigned guard_digits) {
  const Modulus mod(p, m);
  return pow(gamma_p({BigRational(1, 4), mod, guard_digits}), 4);
}

ResidueClass euler_mod_p(std::uint64_t p) {
  if (p < 5) throw std::invalid_argument("euler_mod_p: requires p >= 5");
  const Modulus mod(p, 1);
  const std::uint64_t top = p - 3;  // even, < p, so all factorials below are units

  std::vector<std::uint64_t> fact(top + 1, 1), inv_fact(top + 1, 1);
  for (std::uint64_t i = 1; i <= top; ++i) fact[i] = fact[i - 1] * i % p;
  inv_fact[top] = inverse(ResidueClass(mod, BigInt(static_cast<unsigned long>(fact[top])))).value().get_ui();
  for (std::uint64_t i = top; i > 0; --i) inv_fact[i - 1] = inv_fact[i] * i % p;
  auto binom = [&](std::uint64_t a, std::uint64_t b) { return fact[a] * inv_fact[b] % p * inv_fact[a - b] % p; };

  std::vector<std::uint64_t> e(top / 2 + 1, 0);
  e[0] = 1;
  for (std::uint64_t n = 1; 2 * n <= top; ++n) {
    std::uint64_t acc = 0;
    for (std::uint64_t j = 0; j < n; ++j) acc = (acc + binom(2 * n, 2 * j) * e[j]) % p;
    e[n] = (p - acc) % p;
  }
  return {mod, BigInt(static_cast<unsigned long>(e[top / 2]))};
}

}  // namespace catcube
