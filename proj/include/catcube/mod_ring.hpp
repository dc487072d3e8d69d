#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "catcube/exact.hpp"

namespace catcube {

struct DenominatorDivisibleByP : std::domain_error {
  using std::domain_error::domain_error;
};

struct NotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// p^m for an odd prime p (checked on construction).
class Modulus {
 public:
  Modulus(std::uint64_t p, unsigned m);

  [[nodiscard]] std::uint64_t p() const { return p_; }
  [[nodiscard]] unsigned m() const { return m_; }
  [[nodiscard]] const BigInt& pm() const { return pm_; }
  /// Same prime, different exponent.
  [[nodiscard]] Modulus with_exponent(unsigned m) const { return {p_, m}; }
  /// "p^m", e.g. "5^2".
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.p_ == b.p_ && a.m_ == b.m_; }

 private:
  std::uint64_t p_;
  unsigned m_;
  BigInt pm_;
};

/// Element of Z/p^m held as its least non-negative representative.
class ResidueClass {
 public:
  ResidueClass(Modulus mod, const BigInt& value);
  ResidueClass(Modulus mod, long value) : ResidueClass(std::move(mod), BigInt(value)) {}

  [[nodiscard]] const Modulus& modulus() const { return mod_; }
  [[nodiscard]] const BigInt& value() const { return value_; }
  [[nodiscard]] bool is_unit() const;

  ResidueClass& operator+=(const ResidueClass& o);
  ResidueClass& operator-=(const ResidueClass& o);
  ResidueClass& operator*=(const ResidueClass& o);

  friend ResidueClass operator+(ResidueClass a, const ResidueClass& b) { return a += b; }
  friend ResidueClass operator-(ResidueClass a, const ResidueClass& b) { return a -= b; }
  friend ResidueClass operator*(ResidueClass a, const ResidueClass& b) { return a *= b; }
  friend ResidueClass operator-(const ResidueClass& a) { return {a.mod_, BigInt(-a.value_)}; }

  /// Division by a unit.
  friend ResidueClass operator/(const ResidueClass& a, const ResidueClass& b);

  friend bool operator==(const ResidueClass& a, const ResidueClass& b) {
    return a.mod_ == b.mod_ && a.value_ == b.value_;
  }

 private:
  void require_same(const ResidueClass& o) const;

  Modulus mod_;
  BigInt value_;
};

ResidueClass pow(const ResidueClass& base, unsigned long exponent);

/// Extended Euclid. Throws NotInvertible if p | a.
ResidueClass inverse(const ResidueClass& a);

/// numerator * denominator^{-1} in Z/p^m. Throws DenominatorDivisibleByP.
ResidueClass residue_of_rational(const BigRational& x, const Modulus& mod);

/// a mod p^{m_new}; requires m_new <= a.modulus().m().
ResidueClass reduce_precision(const ResidueClass& a, unsigned m_new);

}  // namespace catcube
