#include "catcube/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

namespace catcube {

std::vector<std::uint64_t> primes_in(std::int64_t lo, std::int64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  const auto top = static_cast<std::uint64_t>(hi);
  std::vector<bool> composite(top + 1, false);
  for (std::uint64_t i = 2; i * i <= top; ++i)
    if (!composite[i])
      for (std::uint64_t j = i * i; j <= top; j += i) composite[j] = true;
  for (std::uint64_t i = static_cast<std::uint64_t>(std::max<std::int64_t>(lo, 2)); i <= top; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

std::string tag_name(const CheckTag& tag) {
  return std::visit([](auto id) { return std::string(to_string(id)); }, tag);
}

std::optional<CheckTag> parse_check_tag(std::string_view name) {
  if (auto id = parse_identity_id(name)) return CheckTag{*id};
  if (auto id = parse_congruence_id(name)) return CheckTag{*id};
  return std::nullopt;
}

std::vector<CheckTag> all_check_tags() {
  std::vector<CheckTag> tags;
  for (auto id : kAllIdentities) tags.emplace_back(id);
  for (auto id : kAllCongruences) tags.emplace_back(id);
  return tags;
}

std::vector<CheckTag> parse_check_list(std::string_view list) {
  if (list == "ALL") return all_check_tags();
  std::vector<CheckTag> tags;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string_view item = list.substr(pos, comma - pos);
    auto tag = parse_check_tag(item);
    if (!tag) throw ConfigError("unknown check tag '" + std::string(item) + "'");
    tags.push_back(*tag);
    pos = comma + 1;
  }
  std::sort(tags.begin(), tags.end());
  tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
  return tags;
}

std::optional<ReportFormat> parse_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "human") return ReportFormat::human;
  return std::nullopt;
}

void validate(const SweepConfig& c) {
  if (c.checks.empty()) throw ConfigError("no checks selected");
  if (c.p_min < 3) throw ConfigError("p_min must be >= 3");
  if (c.p_max < c.p_min) throw ConfigError("p_max must be >= p_min");
  if (c.n_max < 1) throw ConfigError("n_max must be >= 1");
  if (c.jobs < 1) throw ConfigError("jobs must be >= 1");
  if (c.modulus_override && (*c.modulus_override < 1 || *c.modulus_override > 3))
    throw ConfigError("precision override must be 1, 2 or 3");
}

namespace {

ReportRecord from_identity(const IdentityResult& r) {
  ReportRecord rec;
  rec.tag = std::string(to_string(r.id));
  rec.n = r.params.n;
  rec.k = r.params.second;
  rec.modulus = "exact";
  rec.lhs = r.lhs.to_string();
  rec.rhs = r.rhs.to_string();
  rec.pass = r.pass;
  rec.classification = "identity";
  return rec;
}

ReportRecord from_congruence(const CheckResult& r) {
  ReportRecord rec;
  rec.tag = std::string(to_string(r.id));
  rec.p = r.p;
  rec.k = r.k;
  rec.modulus = r.lhs.modulus().to_string();
  rec.lhs = r.lhs.value().get_str();
  rec.rhs = r.rhs.value().get_str();
  rec.pass = r.pass;
  rec.classification = std::string(to_string(r.classification));
  rec.boundary = is_boundary(r.id, r.p);
  rec.rechecked = r.rechecked;
  return rec;
}

using WorkItem = std::function<std::vector<ReportRecord>()>;

std::vector<WorkItem> plan(const SweepConfig& c) {
  std::vector<WorkItem> items;
  const auto primes = primes_in(c.p_min, c.p_max);
  const CheckOptions opts{c.guard_digits, c.modulus_override};
  for (const CheckTag& tag : c.checks) {
    if (const auto* id = std::get_if<IdentityId>(&tag)) {
      for (std::int64_t n = 1; n <= c.n_max; ++n) {
        items.emplace_back([id = *id, n] {
          std::vector<ReportRecord> out;
          for (const auto& r : verify_identity_row(id, static_cast<unsigned>(n))) out.push_back(from_identity(r));
          return out;
        });
      }
      continue;
    }
    const auto id = std::get<CongruenceId>(tag);
    for (std::uint64_t p : primes) {
      items.emplace_back([id, p, opts] {
        std::vector<ReportRecord> out;
        if (auto why = domain_violation(id, p)) {
          ReportRecord rec;
          rec.tag = std::string(to_string(id));
          rec.p = p;
          rec.modulus = Modulus(p, opts.precision.value_or(info(id).exponent)).to_string();
          rec.classification = std::string(to_string(info(id).classification));
          rec.skip_reason = *why;
          out.push_back(std::move(rec));
          return out;
        }
        for (const auto& r : verify_congruence(id, p, std::nullopt, opts)) out.push_back(from_congruence(r));
        return out;
      });
    }
  }
  return items;
}

std::size_t tag_rank(const std::string& name) {
  const auto tags = all_check_tags();
  for (std::size_t i = 0; i < tags.size(); ++i)
    if (tag_name(tags[i]) == name) return i;
  return tags.size();
}

nlohmann::ordered_json to_json(const ReportRecord& r) {
  nlohmann::ordered_json j;
  auto opt = [](const auto& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
  j["tag"] = r.tag;
  j["p"] = opt(r.p);
  j["n"] = opt(r.n);
  j["k"] = opt(r.k);
  j["modulus"] = r.modulus;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["pass"] = r.pass;
  j["class"] = r.classification;
  j["skip_reason"] = opt(r.skip_reason);
  return j;
}

nlohmann::ordered_json records_json(const std::vector<ReportRecord>& recs) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : recs) arr.push_back(to_json(r));
  return arr;
}

nlohmann::ordered_json config_json(const SweepConfig& c) {
  nlohmann::ordered_json j;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& t : c.checks) checks.push_back(tag_name(t));
  j["checks"] = checks;
  j["p_min"] = c.p_min;
  j["p_max"] = c.p_max;
  j["n_max"] = c.n_max;
  j["precision"] = c.modulus_override ? nlohmann::ordered_json(*c.modulus_override) : nlohmann::ordered_json(nullptr);
  j["guard_digits"] = c.guard_digits;
  // jobs is deliberately absent: reports must not depend on it.
  return j;
}

std::string csv_field(const std::optional<std::string>& v) {
  if (!v) return "";
  if (v->find_first_of(",\"\n") == std::string::npos) return *v;
  std::string out = "\"";
  for (char ch : *v) out += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

template <typename T>
std::string opt_str(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string render_csv(const SweepReport& rep, const std::optional<std::string>& ts) {
  std::ostringstream os;
  if (ts) os << "# generated_at=" << *ts << "\n";
  os << "tag,p,n,k,modulus,lhs,rhs,pass,class,skip_reason\n";
  for (const auto& r : rep.results) {
    os << r.tag << ',' << opt_str(r.p) << ',' << opt_str(r.n) << ',' << opt_str(r.k) << ',' << r.modulus << ','
       << csv_field(r.lhs) << ',' << csv_field(r.rhs) << ',' << (r.pass ? "true" : "false") << ','
       << r.classification << ',' << csv_field(r.skip_reason) << '\n';
  }
  return os.str();
}

std::string describe(const ReportRecord& r) {
  std::ostringstream os;
  os << r.tag;
  if (r.p) os << " p=" << *r.p;
  if (r.n) os << " n=" << *r.n;
  if (r.k) os << " k=" << *r.k;
  os << " [" << r.modulus << "] lhs=" << r.lhs << " rhs=" << r.rhs;
  return os.str();
}

std::string render_human(const SweepReport& rep, const std::optional<std::string>& ts) {
  std::ostringstream os;
  if (ts) os << "# generated_at=" << *ts << "\n";
  char line[96];
  std::snprintf(line, sizeof line, "%-10s %8s %8s %8s\n", "tag", "pass", "fail", "skipped");
  os << line;
  for (const auto& s : rep.summary) {
    std::snprintf(line, sizeof line, "%-10s %8zu %8zu %8zu\n", s.tag.c_str(), s.pass, s.fail, s.skipped);
    os << line;
  }
  const auto boundary = rep.boundary();
  if (!boundary.empty()) {
    os << "\nBoundary findings:\n";
    for (const auto& r : boundary) os << "  " << (r.pass ? "PASS " : "FAIL ") << describe(r) << '\n';
  }
  const auto failures = rep.failures();
  if (!failures.empty()) {
    os << "\nFailures:\n";
    for (const auto& r : failures)
      os << "  " << describe(r) << (r.classification == "conjecture" ? " (conjecture counterexample)" : "") << '\n';
  }
  os << "\n" << (failures.empty() ? "all checks passed" : std::to_string(failures.size()) + " failure(s)") << '\n';
  return os.str();
}

}  // namespace

std::vector<ReportRecord> SweepReport::failures() const {
  std::vector<ReportRecord> out;
  std::copy_if(results.begin(), results.end(), std::back_inserter(out), [](const auto& r) { return r.failed(); });
  return out;
}

std::vector<ReportRecord> SweepReport::boundary() const {
  std::vector<ReportRecord> out;
  std::copy_if(results.begin(), results.end(), std::back_inserter(out), [](const auto& r) { return r.boundary; });
  return out;
}

std::vector<ReportRecord> SweepReport::counterexamples() const {
  std::vector<ReportRecord> out;
  std::copy_if(results.begin(), results.end(), std::back_inserter(out),
               [](const auto& r) { return r.failed() && r.classification == "conjecture"; });
  return out;
}

SweepReport run_sweep(const SweepConfig& config) {
  validate(config);
  const auto items = plan(config);
  std::vector<std::vector<ReportRecord>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        slots[i] = items[i]();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned workers = std::min<std::size_t>(config.jobs, std::max<std::size_t>(items.size(), 1));
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepReport rep{config, {}, {}};
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(rep.results));
  auto key = [](const ReportRecord& r) {
    return std::make_tuple(tag_rank(r.tag), r.p ? *r.p : static_cast<std::uint64_t>(r.n.value_or(0)), r.k.value_or(0));
  };
  std::stable_sort(rep.results.begin(), rep.results.end(),
                   [&](const auto& a, const auto& b) { return key(a) < key(b); });

  for (const auto& t : config.checks) rep.summary.push_back({tag_name(t)});
  for (const auto& r : rep.results) {
    auto it = std::find_if(rep.summary.begin(), rep.summary.end(), [&](const auto& s) { return s.tag == r.tag; });
    if (r.skipped()) ++it->skipped;
    else if (r.pass) ++it->pass;
    else ++it->fail;
  }
  return rep;
}

int exit_status(const SweepReport& report) {
  return std::any_of(report.results.begin(), report.results.end(), [](const auto& r) { return r.failed(); }) ? 1 : 0;
}

std::string render(const SweepReport& rep, ReportFormat format, const std::optional<std::string>& timestamp) {
  if (format == ReportFormat::csv) return render_csv(rep, timestamp);
  if (format == ReportFormat::human) return render_human(rep, timestamp);

  nlohmann::ordered_json j;
  nlohmann::ordered_json header;
  header["tool"] = "catcube";
  if (timestamp) header["generated_at"] = *timestamp;
  j["header"] = header;
  j["config"] = config_json(rep.config);
  auto summary = nlohmann::ordered_json::object();
  for (const auto& s : rep.summary) summary[s.tag] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}};
  j["summary"] = summary;
  j["results"] = records_json(rep.results);
  j["failures"] = records_json(rep.failures());
  j["boundary"] = records_json(rep.boundary());
  j["counterexamples"] = records_json(rep.counterexamples());
  return j.dump(2) + "\n";
}

}  // namespace catcube
