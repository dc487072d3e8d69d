#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catcube/mod_ring.hpp"
#include "catcube/padic_gamma.hpp"

namespace catcube {

struct PrimeOutOfDomain : std::domain_error {
  using std::domain_error::domain_error;
};

enum class CongruenceId { INTRO1, INTRO2, BB, BBPLUS, G4, G4PLUS, CCC, CCC2, CCC3, CCCH, CAT_MODP, ODDHARM };

inline constexpr CongruenceId kAllCongruences[] = {
    CongruenceId::INTRO1, CongruenceId::INTRO2, CongruenceId::BB,   CongruenceId::BBPLUS,
    CongruenceId::G4,     CongruenceId::G4PLUS, CongruenceId::CCC,  CongruenceId::CCC2,
    CongruenceId::CCC3,   CongruenceId::CCCH,   CongruenceId::CAT_MODP, CongruenceId::ODDHARM};

enum class Classification { proven, conjecture };

std::string_view to_string(CongruenceId id);
std::string_view to_string(Classification c);
std::optional<CongruenceId> parse_congruence_id(std::string_view tag);

struct CongruenceInfo {
  unsigned exponent;     // the congruence holds mod p^exponent
  Classification classification;
  bool per_index;        // ranges over 0 <= k <= (p-1)/2
  std::uint64_t min_prime;
  std::optional<unsigned> residue_mod4;  // required p mod 4, if any
};

const CongruenceInfo& info(CongruenceId id);

/// Why p lies outside the check's domain ("requires p>5"), or nullopt if it is inside.
std::optional<std::string> domain_violation(CongruenceId id, std::uint64_t p);

/// Primes at which the stated hypotheses are weaker than the proof route
/// (CCC at p = 3; BBPLUS at p = 3, 5). Reported as separate items.
bool is_boundary(CongruenceId id, std::uint64_t p);

struct CheckOptions {
  unsigned guard_digits = kDefaultGuardDigits;
  /// Compare at p^precision instead of the check's own exponent.
  std::optional<unsigned> precision;
  /// Evaluate even outside the prime domain (probing boundary primes).
  bool ignore_domain = false;
};

struct CheckResult {
  CongruenceId id;
  std::uint64_t p;
  std::optional<unsigned> k;
  ResidueClass lhs;
  ResidueClass rhs;
  bool pass;
  Classification classification;
  unsigned guard_digits;
  /// A conjecture check failed and was recomputed at guard_digits + 2.
  bool rechecked = false;
};

/// Both sides of the congruence at prime p, computed independently: the left
/// side from exact sums (or direct sums in Z/p^m for the harmonic-type inner
/// sums), the right side from Gamma_p and Euler residues. Per-index checks
/// return one result per k (all 0..(p-1)/2 when k is empty).
/// Throws PrimeOutOfDomain.
std::vector<CheckResult> verify_congruence(CongruenceId id, std::uint64_t p, std::optional<unsigned> k = std::nullopt,
                                           const CheckOptions& opts = {});

/// The p = 3 (mod 4) mod-p^3 right side with 16 multiplying the whole bracket,
/// 16(1+2p+p^2(48-8E_{p-3}))/Gamma_p(1/4)^4. Kept for reporting the erratum;
/// the G4PLUS check uses (16(1+2p) + p^2(48-8E_{p-3}))/Gamma_p(1/4)^4.
ResidueClass g4plus_printed_rhs(std::uint64_t p, unsigned guard_digits = kDefaultGuardDigits);

}  // namespace catcube
