#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "catcube/congruence_lab.hpp"
#include "catcube/identity_lab.hpp"

namespace catcube {

/// All primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in(std::int64_t lo, std::int64_t hi);

using CheckTag = std::variant<IdentityId, CongruenceId>;

std::string tag_name(const CheckTag& tag);
std::optional<CheckTag> parse_check_tag(std::string_view name);
std::vector<CheckTag> all_check_tags();
/// Comma-separated tags or "ALL". Throws ConfigError on unknown names.
std::vector<CheckTag> parse_check_list(std::string_view list);

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class ReportFormat { json, csv, human };
std::optional<ReportFormat> parse_format(std::string_view name);

struct SweepConfig {
  std::vector<CheckTag> checks = all_check_tags();
  std::int64_t p_min = 3;
  std::int64_t p_max = 100;
  std::int64_t n_max = 50;
  std::optional<unsigned> modulus_override;
  unsigned jobs = 1;
  ReportFormat format = ReportFormat::json;
  std::optional<std::string> output_path;
  unsigned guard_digits = kDefaultGuardDigits;
  bool timestamp = true;
};

/// Throws ConfigError when p_min < 3, p_max < p_min, n_max < 1, jobs < 1,
/// an empty check list or a precision override outside 1..3.
void validate(const SweepConfig& config);

/// One row of the report; field order mirrors the JSON/CSV schema.
struct ReportRecord {
  std::string tag;
  std::optional<std::uint64_t> p;
  std::optional<unsigned> n;
  std::optional<unsigned> k;
  std::string modulus;  // "p^m", or "exact" for identities
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::string classification;  // proven | conjecture | identity
  std::optional<std::string> skip_reason;
  bool boundary = false;
  bool rechecked = false;

  [[nodiscard]] bool skipped() const { return skip_reason.has_value(); }
  [[nodiscard]] bool failed() const { return !skipped() && !pass; }
};

struct TagSummary {
  std::string tag;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct SweepReport {
  SweepConfig config;
  std::vector<ReportRecord> results;  // sorted by (tag, p or n, k)
  std::vector<TagSummary> summary;    // one per selected tag, in tag order

  [[nodiscard]] std::vector<ReportRecord> failures() const;
  [[nodiscard]] std::vector<ReportRecord> boundary() const;
  /// Conjecture failures that survived the guard-digit recheck.
  [[nodiscard]] std::vector<ReportRecord> counterexamples() const;
};

/// Executes every selected check over its domain: identities for n in
/// [1, n_max], congruences for primes in [p_min, p_max]. Out-of-domain
/// primes become skipped records. Work is spread over `jobs` threads; the
/// result order does not depend on scheduling.
SweepReport run_sweep(const SweepConfig& config);

/// 0 if no result failed, 1 otherwise.
int exit_status(const SweepReport& report);

/// Serializes the report. The timestamp, when given, appears only in the
/// JSON "header" object or the leading CSV/human comment line.
std::string render(const SweepReport& report, ReportFormat format,
                   const std::optional<std::string>& timestamp = std::nullopt);

}  // namespace catcube
