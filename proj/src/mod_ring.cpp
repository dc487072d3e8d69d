#include "catcube/mod_ring.hpp"

namespace catcube {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2)
    if (n % d == 0) return false;
  return true;
}

Modulus::Modulus(std::uint64_t p, unsigned m) : p_(p), m_(m) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("Modulus: p must be an odd prime, got " + std::to_string(p));
  if (m < 1) throw std::invalid_argument("Modulus: exponent must be >= 1");
  mpz_ui_pow_ui(pm_.get_mpz_t(), p, m);
}

std::string Modulus::to_string() const { return std::to_string(p_) + "^" + std::to_string(m_); }

ResidueClass::ResidueClass(Modulus mod, const BigInt& value) : mod_(std::move(mod)) {
  mpz_mod(value_.get_mpz_t(), value.get_mpz_t(), mod_.pm().get_mpz_t());
}

bool ResidueClass::is_unit() const { return mpz_divisible_ui_p(value_.get_mpz_t(), mod_.p()) == 0; }

void ResidueClass::require_same(const ResidueClass& o) const {
  if (!(mod_ == o.mod_))
    throw std::invalid_argument("ResidueClass: modulus mismatch " + mod_.to_string() + " vs " + o.mod_.to_string());
}

ResidueClass& ResidueClass::operator+=(const ResidueClass& o) {
  require_same(o);
  value_ += o.value_;
  if (value_ >= mod_.pm()) value_ -= mod_.pm();
  return *this;
}

ResidueClass& ResidueClass::operator-=(const ResidueClass& o) {
  require_same(o);
  value_ -= o.value_;
  if (sgn(value_) < 0) value_ += mod_.pm();
  return *this;
}

ResidueClass& ResidueClass::operator*=(const ResidueClass& o) {
  require_same(o);
  value_ *= o.value_;
  mpz_mod(value_.get_mpz_t(), value_.get_mpz_t(), mod_.pm().get_mpz_t());
  return *this;
}

ResidueClass operator/(const ResidueClass& a, const ResidueClass& b) { return a * inverse(b); }

ResidueClass pow(const ResidueClass& base, unsigned long exponent) {
  BigInt r;
  mpz_powm_ui(r.get_mpz_t(), base.value().get_mpz_t(), exponent, base.modulus().pm().get_mpz_t());
  return {base.modulus(), r};
}

ResidueClass inverse(const ResidueClass& a) {
  if (!a.is_unit())
    throw NotInvertible("inverse: " + a.value().get_str() + " is divisible by p (mod " + a.modulus().to_string() + ")");
  // Extended Euclid on (value, p^m), tracking the coefficient of value.
  BigInt old_r = a.value(), r = a.modulus().pm();
  BigInt old_s = 1, s = 0;
  while (sgn(r) != 0) {
    const BigInt q = old_r / r;
    BigInt t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return {a.modulus(), old_s};
}

ResidueClass residue_of_rational(const BigRational& x, const Modulus& mod) {
  const ResidueClass den(mod, x.denominator());
  if (!den.is_unit())
    throw DenominatorDivisibleByP("residue_of_rational: denominator of " + x.to_string() + " divisible by " +
                                  std::to_string(mod.p()));
  return ResidueClass(mod, x.numerator()) * inverse(den);
}

ResidueClass reduce_precision(const ResidueClass& a, unsigned m_new) {
  if (m_new > a.modulus().m())
    throw std::invalid_argument("reduce_precision: cannot raise precision");
  return {a.modulus().with_exponent(m_new), a.value()};
}

}  // namespace catcube
