#include "catcube/congruence_lab.hpp"

#include <array>
#include <map>

namespace catcube {

namespace {

constexpr std::array<std::string_view, 12> kNames = {"INTRO1", "INTRO2", "BB",   "BBPLUS", "G4",       "G4PLUS",
                                                     "CCC",    "CCC2",   "CCC3", "CCCH",   "CAT_MODP", "ODDHARM"};

using C = Classification;
constexpr std::array<CongruenceInfo, 12> kInfo = {{
    {2, C::proven, false, 3, std::nullopt},      // INTRO1
    {3, C::proven, false, 3, std::nullopt},      // INTRO2
    {2, C::proven, true, 3, std::nullopt},       // BB
    {3, C::proven, true, 3, std::nullopt},       // BBPLUS
    {2, C::proven, false, 5, std::nullopt},      // G4
    {3, C::proven, false, 5, 3U},                // G4PLUS
    {2, C::proven, false, 3, std::nullopt},      // CCC
    {2, C::proven, false, 7, std::nullopt},      // CCC2
    {3, C::conjecture, false, 3, std::nullopt},  // CCC3
    {1, C::conjecture, false, 5, std::nullopt},  // CCCH
    {1, C::proven, true, 3, std::nullopt},       // CAT_MODP
    {1, C::proven, true, 5, std::nullopt},       // ODDHARM
}};

BigInt small(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// Per-prime evaluation state; caches Gamma_p(1/4)^4 and the odd harmonic prefix.
class PrimeContext {
 public:
  PrimeContext(std::uint64_t p, unsigned m, unsigned guard) : p_(p), n_((p - 1) / 2), mod_(p, m), guard_(guard) {}

  [[nodiscard]] std::uint64_t p() const { return p_; }
  [[nodiscard]] unsigned n() const { return n_; }
  [[nodiscard]] const Modulus& mod() const { return mod_; }
  [[nodiscard]] bool p_is_1_mod_4() const { return p_ % 4 == 1; }

  [[nodiscard]] ResidueClass res(const BigRational& x) const { return residue_of_rational(x, mod_); }
  [[nodiscard]] ResidueClass res(const BigInt& x) const { return {mod_, x}; }
  [[nodiscard]] ResidueClass res(long x) const { return {mod_, x}; }

  const ResidueClass& gamma4() {
    if (!gamma4_) gamma4_ = gamma_quarter_pow4(p_, mod_.m(), guard_);
    return *gamma4_;
  }

  // E_{p-3} as its least non-negative residue mod p, lifted to Z/p^m.
  ResidueClass euler_lift() const { return res(euler_mod_p(p_).value()); }

  // odd_harm[k] = sum_{j=1}^k 1/(2j-1)^2 in Z/p^m, k = 0..n, computed directly in the ring.
  const std::vector<ResidueClass>& odd_harmonic_prefix() {
    if (odd_harm_.empty()) {
      odd_harm_.push_back(res(0L));
      for (unsigned j = 1; j <= n_; ++j) {
        const ResidueClass d = res(static_cast<long>(2 * j - 1));
        odd_harm_.push_back(odd_harm_.back() + inverse(d * d));
      }
    }
    return odd_harm_;
  }

 private:
  std::uint64_t p_;
  unsigned n_;
  Modulus mod_;
  unsigned guard_;
  std::optional<ResidueClass> gamma4_;
  std::vector<ResidueClass> odd_harm_;
};

struct Sides {
  ResidueClass lhs;
  ResidueClass rhs;
  bool extra_ok = true;  // auxiliary exact identity (BB middle form)
};

BigRational cat_over_4k_pow(unsigned k, unsigned d) {
  return pow(BigRational(catalan(k), ipow(4, k)), d);
}

BigRational central_sq_over_16k(unsigned k) {
  const BigInt b = binomial(2L * k, k);
  return {b * b, ipow(16, k)};
}

Sides eval_scalar(CongruenceId id, PrimeContext& ctx) {
  const unsigned n = ctx.n();
  const long p = static_cast<long>(ctx.p());
  switch (id) {
    case CongruenceId::INTRO1: {
      const long sign = (n % 2 == 0) ? 1 : -1;
      return {ctx.res(catalan_power_sum(n, 1)), ctx.res(2 - 2 * sign * p)};
    }
    case CongruenceId::INTRO2:
      return {ctx.res(catalan_power_sum(n, 2)), ctx.res(-4 + 12 * p * p)};
    case CongruenceId::G4: {
      const ResidueClass lhs = ctx.res(central_sq_over_16k(n / 2));
      const ResidueClass& g = ctx.gamma4();
      if (ctx.p_is_1_mod_4()) return {lhs, -g};
      return {lhs, ctx.res(16 * (1 + 2 * p)) / g};
    }
    case CongruenceId::G4PLUS: {
      const ResidueClass lhs = ctx.res(central_sq_over_16k(n / 2));
      const ResidueClass num = ctx.res(16 * (1 + 2 * p)) + ctx.res(p * p) * (ctx.res(48L) - ctx.res(8L) * ctx.euler_lift());
      return {lhs, num / ctx.gamma4()};
    }
    case CongruenceId::CCC:
    case CongruenceId::CCC3: {
      const ResidueClass lhs = ctx.res(catalan_power_sum(n, 3));
      const ResidueClass& g = ctx.gamma4();
      if (!ctx.p_is_1_mod_4()) return {lhs, ctx.res(8L) - ctx.res(384L) / g};
      if (id == CongruenceId::CCC) return {lhs, ctx.res(8L)};
      return {lhs, ctx.res(8L) - ctx.res(24 * p * p) / g};
    }
    case CongruenceId::CCC2: {
      BigRational sum;
      for (unsigned k = 1; k <= n; ++k) {
        const BigInt b = binomial(2L * k, k);
        sum += BigRational(ipow(k, 3) * b * b * b, ipow(64, k));
      }
      const ResidueClass lhs = ctx.res(sum);
      if (ctx.p_is_1_mod_4()) return {lhs, ctx.res(0L)};
      return {lhs, -(ctx.res(2L) / (ctx.res(5L) * ctx.gamma4()))};
    }
    case CongruenceId::CCCH: {
      const auto& h = ctx.odd_harmonic_prefix();
      ResidueClass lhs = ctx.res(0L);
      for (unsigned k = 0; k <= n; ++k) lhs += ctx.res(cat_over_4k_pow(k, 3)) * h[k];
      const ResidueClass& g = ctx.gamma4();
      if (ctx.p_is_1_mod_4()) return {lhs, ctx.res(-8L) - ctx.res(24L) / g - ctx.res(4L) * g};
      return {lhs, ctx.res(-8L) + ctx.res(192L) * (ctx.res(5L) - ctx.euler_lift()) / g};
    }
    default:
      throw std::logic_error("eval_scalar: per-index check");
  }
}

// State shared across k for the per-index checks at one prime.
struct IndexedState {
  std::vector<BigInt> odd_square_product;  // prod_{j=1}^k ((2j-1)^2 - p^2)
  std::vector<BigRational> h2;             // H_i^{(2)} exact, i = 0..n
};

Sides eval_indexed(CongruenceId id, PrimeContext& ctx, unsigned k, IndexedState& st) {
  const unsigned n = ctx.n();
  const long p = static_cast<long>(ctx.p());
  switch (id) {
    case CongruenceId::BB:
    case CongruenceId::BBPLUS: {
      const BigInt signed_product = (k % 2 == 0 ? 1 : -1) * binomial(n, k) * binomial(static_cast<long>(n) + k, k);
      Sides s{ctx.res(signed_product), ctx.res(central_sq_over_16k(k))};
      if (id == CongruenceId::BBPLUS) {
        s.rhs *= ctx.res(1L) - ctx.res(p * p) * ctx.odd_harmonic_prefix()[k];
      } else {
        if (st.odd_square_product.empty()) {
          st.odd_square_product.emplace_back(1);
          for (unsigned j = 1; j <= n; ++j) {
            const long o = 2L * j - 1;
            st.odd_square_product.push_back(st.odd_square_product.back() * BigInt(o * o - p * p));
          }
        }
        BigInt fact;
        mpz_fac_ui(fact.get_mpz_t(), 2UL * k);
        s.extra_ok = signed_product * ipow(4, k) * fact == binomial(2L * k, k) * st.odd_square_product[k];
      }
      return s;
    }
    case CongruenceId::CAT_MODP: {
      const ResidueClass rhs = ctx.res((k % 2 == 0 ? 1 : -1) * binomial(n + 1L, k + 1L)) / ctx.res(static_cast<long>(n) + 1);
      return {ctx.res(cat_over_4k_pow(k, 1)), rhs};
    }
    case CongruenceId::ODDHARM: {
      if (st.h2.empty()) {
        st.h2.emplace_back();
        for (unsigned i = 1; i <= n; ++i)
          st.h2.push_back(st.h2.back() + BigRational(BigInt(1), small(static_cast<std::uint64_t>(i) * i)));
      }
      return {ctx.odd_harmonic_prefix()[k], -(ctx.res(st.h2[n - k]) / ctx.res(4L))};
    }
    default:
      throw std::logic_error("eval_indexed: scalar check");
  }
}

std::vector<CheckResult> evaluate(CongruenceId id, std::uint64_t p, std::optional<unsigned> k, unsigned guard,
                                  unsigned precision) {
  const CongruenceInfo& inf = info(id);
  PrimeContext ctx(p, precision, guard);
  std::vector<CheckResult> out;
  auto record = [&](std::optional<unsigned> idx, Sides s) {
    const bool pass = s.extra_ok && s.lhs == s.rhs;
    out.push_back({id, p, idx, std::move(s.lhs), std::move(s.rhs), pass, inf.classification, guard});
  };
  if (!inf.per_index) {
    record(std::nullopt, eval_scalar(id, ctx));
    return out;
  }
  IndexedState st;
  const unsigned lo = k.value_or(0);
  const unsigned hi = k.value_or(ctx.n());
  for (unsigned i = lo; i <= hi; ++i) record(i, eval_indexed(id, ctx, i, st));
  return out;
}

}  // namespace

std::string_view to_string(CongruenceId id) { return kNames[static_cast<std::size_t>(id)]; }

std::string_view to_string(Classification c) { return c == Classification::proven ? "proven" : "conjecture"; }

std::optional<CongruenceId> parse_congruence_id(std::string_view tag) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == tag) return static_cast<CongruenceId>(i);
  return std::nullopt;
}

const CongruenceInfo& info(CongruenceId id) { return kInfo[static_cast<std::size_t>(id)]; }

std::optional<std::string> domain_violation(CongruenceId id, std::uint64_t p) {
  const CongruenceInfo& inf = info(id);
  if (!is_prime(p) || p < 3) return "requires an odd prime";
  if (p < inf.min_prime) return "requires p>" + std::to_string(inf.min_prime - 2);
  if (inf.residue_mod4 && p % 4 != *inf.residue_mod4) return "requires p=" + std::to_string(*inf.residue_mod4) + " mod 4";
  return std::nullopt;
}

bool is_boundary(CongruenceId id, std::uint64_t p) {
  return (id == CongruenceId::CCC && p == 3) || (id == CongruenceId::BBPLUS && (p == 3 || p == 5));
}

std::vector<CheckResult> verify_congruence(CongruenceId id, std::uint64_t p, std::optional<unsigned> k,
                                           const CheckOptions& opts) {
  if (auto why = domain_violation(id, p); why && !(opts.ignore_domain && is_prime(p) && p >= 3))
    throw PrimeOutOfDomain(std::string(to_string(id)) + " at p=" + std::to_string(p) + ": " + *why);
  const CongruenceInfo& inf = info(id);
  if (k && !inf.per_index) throw std::invalid_argument(std::string(to_string(id)) + " takes no index k");
  if (k && *k > (p - 1) / 2) throw std::invalid_argument("k exceeds (p-1)/2");
  const unsigned precision = opts.precision.value_or(inf.exponent);

  auto results = evaluate(id, p, k, opts.guard_digits, precision);
  if (inf.classification == Classification::conjecture) {
    for (auto& r : results) {
      if (r.pass) continue;
      auto again = evaluate(id, p, r.k, opts.guard_digits + 2, precision);
      r = std::move(again.front());
      r.rechecked = true;
    }
  }
  return results;
}

ResidueClass g4plus_printed_rhs(std::uint64_t p, unsigned guard_digits) {
  if (auto why = domain_violation(CongruenceId::G4PLUS, p)) throw PrimeOutOfDomain("G4PLUS printed form: " + *why);
  PrimeContext ctx(p, 3, guard_digits);
  const long pl = static_cast<long>(p);
  const ResidueClass inner = ctx.res(1 + 2 * pl) + ctx.res(pl * pl) * (ctx.res(48L) - ctx.res(8L) * ctx.euler_lift());
  return ctx.res(16L) * inner / ctx.gamma4();
}

}  // namespace catcube
