#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catcube/exact.hpp"

namespace catcube {

struct InvalidParams : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class IdentityId { CF1, CF2, BELL, QUOT1, QUOT2, QUOT3, ID1, ID2, ID3, ID4, SHEN };

inline constexpr IdentityId kAllIdentities[] = {IdentityId::CF1,   IdentityId::CF2, IdentityId::BELL, IdentityId::QUOT1,
                                                IdentityId::QUOT2, IdentityId::QUOT3, IdentityId::ID1, IdentityId::ID2,
                                                IdentityId::ID3,   IdentityId::ID4, IdentityId::SHEN};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view tag);

/// The second index an identity ranges over, if any.
enum class SecondIndex { none, j, k };
SecondIndex second_index(IdentityId id);

/// n is the main parameter (m for SHEN); `second` is j for BELL, k for QUOT*.
struct IdentityParams {
  unsigned n = 0;
  std::optional<unsigned> second;
};

struct IdentityResult {
  IdentityId id;
  IdentityParams params;
  BigRational lhs;
  BigRational rhs;
  bool pass = false;
};

/// Evaluates both sides of the identity by separate formulas and compares
/// exactly. Throws InvalidParams outside the identity's domain.
IdentityResult verify_identity(IdentityId id, IdentityParams params);

/// Both sides at every second index for a fixed n (BELL: 0..n, QUOT*: 0..n);
/// a single result for identities without a second index.
std::vector<IdentityResult> verify_identity_row(IdentityId id, unsigned n);

/// Right side of the Gould sum: (1+(-1)^{n-j})/2 binom(n+j,(n+j)/2) binom(n-j,(n-j)/2).
BigInt bell_closed_form(unsigned n, unsigned j);

/// binom(2h,h)^2 / 16^h with h = floor(n/2): the common factor of ID1..ID4.
BigRational central_square_factor(unsigned n);

}  // namespace catcube
