#pragma once

#include <cstdint>

#include "catcube/exact.hpp"
#include "catcube/mod_ring.hpp"

namespace catcube {

struct ArgumentNotPAdicInteger : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr unsigned kDefaultGuardDigits = 2;

/// (-1)^n * prod_{0<=k<n, p does not divide k} k  mod p^m.
///
/// Full runs of p^j consecutive integers are multiplied as polynomials in the
/// run offset, truncated to degree < m (the offset is always a multiple of p),
/// so the cost is O(m^2 p log_p n) ring operations instead of O(n).
ResidueClass gamma_p_int(const BigInt& n, const Modulus& mod);

/// The same product evaluated term by term. Reference implementation.
ResidueClass gamma_p_int_direct(std::uint64_t n, const Modulus& mod);

struct GammaRequest {
  BigRational argument;
  Modulus modulus;
  unsigned guard_digits = kDefaultGuardDigits;
};

/// Morita's Gamma_p(x) mod p^m for a p-adic integer x: the integer product at
/// the least non-negative n* = x (mod p^{m+guard}), reduced to p^m.
ResidueClass gamma_p(const GammaRequest& req);

/// Gamma_p(1/4)^4 mod p^m.
ResidueClass gamma_quarter_pow4(std::uint64_t p, unsigned m, unsigned guard_digits = kDefaultGuardDigits);

/// E_{p-3} mod p via the secant recurrence carried out in Z/p. Requires p >= 5.
ResidueClass euler_mod_p(std::uint64_t p);

}  // namespace catcube
