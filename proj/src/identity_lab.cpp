#include "catcube/identity_lab.hpp"

#include <array>

namespace catcube {

namespace {

constexpr std::array<std::string_view, 11> kNames = {"CF1", "CF2",   "BELL", "QUOT1", "QUOT2", "QUOT3",
                                                     "ID1", "ID2",   "ID3",  "ID4",   "SHEN"};

BigRational rat(long num, long den = 1) { return {BigInt(num), BigInt(den)}; }

BigInt gould(unsigned n, unsigned k, unsigned j) { return gould_term(n, k, j).value; }

BigRational lhs_bell(unsigned n, unsigned j) {
  BigInt sum = 0;
  for (unsigned k = 0; k <= n; ++k) sum += gould(n, k, j);
  return sum;
}

// Quotient expansions: left sides are ratios of Gould terms, right sides the
// partial fraction forms in 1/(k+1).
BigRational lhs_quot(IdentityId id, unsigned n, unsigned k) {
  const BigInt base = gould(n, k, 0);
  const long nn = n;
  switch (id) {
    case IdentityId::QUOT1:
      return BigRational(gould(n, k, 1), base);
    case IdentityId::QUOT2:
      return BigRational(gould(n + 1, k + 1, 1) - BigInt(nn * nn - nn) * gould(n, k, 2), base);
    default:
      return BigRational(gould(n + 1, k + 1, 0), base);
  }
}

BigRational rhs_quot(IdentityId id, unsigned n, unsigned k) {
  const long nn = n;
  const BigRational u = rat(1, static_cast<long>(k) + 1);
  switch (id) {
    case IdentityId::QUOT1:
      return rat(1) - u;
    case IdentityId::QUOT2:
      return rat(4 + nn - nn * nn) + rat(4 * nn * nn + 4 * nn - 2) * u - rat(2 * nn * (nn + 1)) * u * u;
    default:
      return rat(4) + rat(8 * nn + 2) * u + rat(4 * nn * nn - 2) * u * u - rat(2 * nn * (nn + 1)) * u * u * u;
  }
}

BigRational rhs_id(IdentityId id, unsigned n) {
  const BigRational c = central_square_factor(n);
  const BigInt N = n;
  const bool even = n % 2 == 0;
  switch (id) {
    case IdentityId::ID1:
      return even ? c : c * BigRational(N, N + 1);
    case IdentityId::ID2:
      return even ? c * 2L : c * BigRational(2 * N * N + 2 * N - 1, (N + 1) * (N + 1));
    case IdentityId::ID3: {
      const BigRational head(BigInt(-2), N * (N + 1));
      const BigInt n4 = N * N * N * N;
      const BigRational tail = even ? BigRational((2 * N + 1) * (2 * N + 1), N * (N + 1))
                                    : BigRational(4 * n4 + 8 * N * N * N + 3 * N * N - N + 1, N * (N + 1) * (N + 1) * (N + 1));
      return head + c * tail;
    }
    default: {
      const BigInt n4 = N * N * N * N;
      const BigInt num = even ? BigInt(N * N * (N + 1) * (N + 1) * (2 * N + 1) * (2 * N + 1))
                              : BigInt(-(N * N) * (4 * n4 + 8 * N * N * N + 3 * N * N - N + 1));
      return c * BigRational(num, 15);
    }
  }
}

BigRational lhs_id(IdentityId id, unsigned n) {
  static constexpr long kOne[] = {1};
  static constexpr long kCube[] = {0, 0, 0, 1};
  switch (id) {
    case IdentityId::ID1: return q_weighted_gould_sum(kOne, n, 1);
    case IdentityId::ID2: return q_weighted_gould_sum(kOne, n, 2);
    case IdentityId::ID3: return q_weighted_gould_sum(kOne, n, 3);
    default: return q_weighted_gould_sum(kCube, n, 0);
  }
}

// sum_{k=0}^{2m} (-1)^k binom(2m,k)^3 H_k^{(2)}
BigRational lhs_shen(unsigned m) {
  BigRational sum;
  BigRational h;  // running H_k^{(2)}
  for (unsigned k = 0; k <= 2 * m; ++k) {
    if (k > 0) h += BigRational(BigInt(1), BigInt(static_cast<unsigned long>(k)) * k);
    const BigInt b = binomial(2L * m, k);
    BigRational term = h * BigRational(b * b * b);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

// (-1)^m/2 (3m)!/(m!)^3 (H_m^{(2)} + H_{2m}^{(2)})
BigRational rhs_shen(unsigned m) {
  BigInt f3m, fm;
  mpz_fac_ui(f3m.get_mpz_t(), 3UL * m);
  mpz_fac_ui(fm.get_mpz_t(), m);
  const BigRational coeff(m % 2 == 0 ? f3m : BigInt(-f3m), 2 * fm * fm * fm);
  return coeff * (harmonic(m, 2) + harmonic(2 * m, 2));
}

}  // namespace

std::string_view to_string(IdentityId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<IdentityId> parse_identity_id(std::string_view tag) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == tag) return static_cast<IdentityId>(i);
  return std::nullopt;
}

SecondIndex second_index(IdentityId id) {
  switch (id) {
    case IdentityId::BELL: return SecondIndex::j;
    case IdentityId::QUOT1:
    case IdentityId::QUOT2:
    case IdentityId::QUOT3: return SecondIndex::k;
    default: return SecondIndex::none;
  }
}

BigInt bell_closed_form(unsigned n, unsigned j) {
  if ((n - j) % 2 != 0) return 0;
  return binomial(n + j, (n + j) / 2) * binomial(n - j, (n - j) / 2);
}

BigRational central_square_factor(unsigned n) {
  const unsigned h = n / 2;
  const BigInt b = binomial(2L * h, h);
  return BigRational(b * b, ipow(16, h));
}

IdentityResult verify_identity(IdentityId id, IdentityParams params) {
  const unsigned n = params.n;
  const auto label = std::string(to_string(id));
  if (second_index(id) != SecondIndex::none) {
    if (!params.second) throw InvalidParams(label + ": missing second index");
    if (*params.second > n) throw InvalidParams(label + ": second index exceeds n");
  } else if (params.second) {
    throw InvalidParams(label + ": takes no second index");
  }
  const bool needs_positive = id != IdentityId::BELL && second_index(id) != SecondIndex::k;
  if (needs_positive && n == 0) throw InvalidParams(label + ": requires n >= 1");

  IdentityResult r{id, params, {}, {}, false};
  switch (id) {
    case IdentityId::CF1: {
      r.lhs = catalan_power_sum(n, 1);
      r.rhs = BigRational(2L) - BigRational(binomial(2L * n + 1, n), ipow(4, n));
      break;
    }
    case IdentityId::CF2: {
      const BigInt b = binomial(2L * n + 1, n);
      r.lhs = catalan_power_sum(n, 2);
      r.rhs = BigRational(-4L) + BigRational(BigInt(5 + 4L * n) * b * b, ipow(16, n));
      break;
    }
    case IdentityId::BELL:
      r.lhs = lhs_bell(n, *params.second);
      r.rhs = bell_closed_form(n, *params.second);
      break;
    case IdentityId::QUOT1:
    case IdentityId::QUOT2:
    case IdentityId::QUOT3:
      r.lhs = lhs_quot(id, n, *params.second);
      r.rhs = rhs_quot(id, n, *params.second);
      break;
    case IdentityId::ID1:
    case IdentityId::ID2:
    case IdentityId::ID3:
    case IdentityId::ID4:
      r.lhs = lhs_id(id, n);
      r.rhs = rhs_id(id, n);
      break;
    case IdentityId::SHEN:
      r.lhs = lhs_shen(n);
      r.rhs = rhs_shen(n);
      break;
  }
  r.pass = r.lhs == r.rhs;
  return r;
}

std::vector<IdentityResult> verify_identity_row(IdentityId id, unsigned n) {
  std::vector<IdentityResult> out;
  if (second_index(id) == SecondIndex::none) {
    out.push_back(verify_identity(id, {n, std::nullopt}));
    return out;
  }
  out.reserve(n + 1);
  for (unsigned s = 0; s <= n; ++s) out.push_back(verify_identity(id, {n, s}));
  return out;
}

}  // namespace catcube
