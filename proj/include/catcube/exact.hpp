#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace catcube {

using BigInt = mpz_class;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Equality is structural on the canonical form.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& num, const BigInt& den);

  [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
  [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] int sign() const { return sgn(q_); }

  /// "num" or "num/den" in decimal.
  [[nodiscard]] std::string to_string() const;

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { BigRational r; r.q_ = -a.q_; return r; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

BigRational pow(const BigRational& base, unsigned exponent);
BigInt ipow(long base, unsigned exponent);

/// Binomial coefficient; 0 outside the Pascal triangle (k < 0, k > n or n < 0).
BigInt binomial(long n, long k);

/// C_k = binom(2k,k)/(k+1).
BigInt catalan(unsigned k);

/// H_k^{(r)} = sum_{j=1}^k 1/j^r.
BigRational harmonic(unsigned k, unsigned r);

/// Euler (secant) numbers E_0, E_2, ..., E_max_index; odd indices vanish and
/// are not stored.
class EulerTable {
 public:
  explicit EulerTable(std::vector<BigInt> even_values) : values_(std::move(even_values)) {}

  [[nodiscard]] unsigned max_index() const { return 2 * static_cast<unsigned>(values_.size() - 1); }
  /// E_n for any n <= max_index (0 for odd n).
  [[nodiscard]] BigInt at(unsigned n) const;
  [[nodiscard]] std::span<const BigInt> even_values() const { return values_; }

 private:
  std::vector<BigInt> values_;
};

/// Builds E_0..E_max_index by sum_{j=0}^{n} binom(2n,2j) E_{2j} = 0.
/// Throws std::invalid_argument if max_index is odd.
EulerTable euler_numbers(unsigned max_index);

/// A(n,k,j) = binom(n,k) binom(n+k,k) binom(2k,k+j) (-4)^(n-k).
struct GouldTerm {
  unsigned n = 0;
  unsigned k = 0;
  unsigned j = 0;
  BigInt value;
};

GouldTerm gould_term(unsigned n, unsigned k, unsigned j);

/// sum_{k=0}^n (C_k / 4^k)^d.
BigRational catalan_power_sum(unsigned n, unsigned d);

/// sum_{k=0}^n Q(k) binom(n,k) binom(n+k,k) binom(2k,k) / ((-4)^k (k+1)^denom_power),
/// where q_coeffs[i] is the coefficient of x^i in Q.
BigRational q_weighted_gould_sum(std::span<const long> q_coeffs, unsigned n, unsigned denom_power);

}  // namespace catcube
