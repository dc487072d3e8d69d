// catcube: sweeps the Catalan-cube identities and supercongruences over
// ranges of n and primes, plus ad-hoc Gamma_p / Euler / Dixon evaluation.

#include <ctime>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "catcube/dixon.hpp"
#include "catcube/padic_gamma.hpp"
#include "catcube/sweep.hpp"

namespace {

constexpr int kUsageError = 2;

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

catcube::BigRational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  catcube::BigInt num, den = 1;
  if (num.set_str(text.substr(0, slash), 10) != 0 ||
      (slash != std::string::npos && den.set_str(text.substr(slash + 1), 10) != 0))
    throw catcube::ConfigError("not a rational number: '" + text + "'");
  if (sgn(den) == 0) throw catcube::ConfigError("zero denominator in '" + text + "'");
  return {num, den};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"catcube - exact verification of Catalan-cube supercongruences"};
  app.require_subcommand(1);

  std::string checks = "ALL", format = "json", output;
  catcube::SweepConfig cfg;
  unsigned precision = 0;
  bool no_timestamp = false;
  auto* sweep = app.add_subcommand("sweep", "run identity and congruence checks");
  sweep->add_option("--checks", checks, "comma-separated tags or ALL")->capture_default_str();
  sweep->add_option("--p-min", cfg.p_min, "smallest prime")->capture_default_str();
  sweep->add_option("--p-max", cfg.p_max, "largest prime")->capture_default_str();
  sweep->add_option("--n-max", cfg.n_max, "identity range is 1..n-max")->capture_default_str();
  sweep->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
  sweep->add_option("--format", format, "json, csv or human")->capture_default_str();
  sweep->add_option("--output", output, "write the report here instead of stdout");
  sweep->add_option("--guard-digits", cfg.guard_digits, "extra p-adic digits for Gamma_p")->capture_default_str();
  sweep->add_option("--precision", precision, "compare every congruence mod p^precision (1..3)");
  sweep->add_flag("--no-timestamp", no_timestamp, "omit generated_at from the report header");

  unsigned long terms = 100000;
  double tolerance = 1e-10;
  auto* dixon = app.add_subcommand("dixon", "compare the partial Catalan-cube sum with 8 - 384 pi / Gamma(1/4)^4");
  dixon->add_option("--terms", terms, "number of summed terms")->capture_default_str();
  dixon->add_option("--tolerance", tolerance, "allowed absolute difference")->capture_default_str();

  std::uint64_t p = 5;
  unsigned m = 1;
  unsigned guard = catcube::kDefaultGuardDigits;
  std::string argument = "1/4";
  auto* gamma = app.add_subcommand("gamma", "print Gamma_p(a/b) mod p^m");
  gamma->add_option("--p", p, "odd prime")->required();
  gamma->add_option("--m", m, "precision exponent")->capture_default_str();
  gamma->add_option("--arg", argument, "p-adic integer argument a/b")->capture_default_str();
  gamma->add_option("--guard-digits", guard, "extra p-adic digits")->capture_default_str();

  std::uint64_t euler_p = 5;
  auto* euler = app.add_subcommand("euler", "print E_{p-3} mod p");
  euler->add_option("--p", euler_p, "prime >= 5")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*sweep) {
      cfg.checks = catcube::parse_check_list(checks);
      const auto fmt = catcube::parse_format(format);
      if (!fmt) throw catcube::ConfigError("unknown format '" + format + "'");
      cfg.format = *fmt;
      if (precision != 0) cfg.modulus_override = precision;
      if (!output.empty()) cfg.output_path = output;
      cfg.timestamp = !no_timestamp;
      catcube::validate(cfg);

      const auto report = catcube::run_sweep(cfg);
      const auto text = catcube::render(report, cfg.format,
                                        cfg.timestamp ? std::optional(utc_timestamp()) : std::nullopt);
      if (cfg.output_path) {
        std::ofstream out(*cfg.output_path, std::ios::binary);
        if (!out) throw catcube::ConfigError("cannot open " + *cfg.output_path);
        out << text;
      } else {
        std::cout << text;
      }
      return catcube::exit_status(report);
    }
    if (*dixon) {
      if (terms == 0 || !(tolerance > 0)) throw catcube::ConfigError("terms must be >= 1 and tolerance > 0");
      const auto r = catcube::dixon_float_check(terms, tolerance);
      std::cout << "terms        " << r.terms << "\n"
                << "partial sum  " << r.partial_sum << "\n"
                << "closed form  " << r.closed_form << "\n"
                << "difference   " << r.difference << "\n"
                << "tail bound   " << r.tail_bound << "\n"
                << "tolerance    " << r.tolerance << "\n"
                << (r.pass ? "PASS" : "FAIL") << "\n";
      return r.pass ? 0 : 1;
    }
    if (*gamma) {
      const catcube::Modulus mod(p, m);
      const auto value = catcube::gamma_p({parse_rational(argument), mod, guard});
      std::cout << "Gamma_" << p << "(" << argument << ") = " << value.value().get_str() << " (mod " << mod.to_string()
                << ")\n";
      return 0;
    }
    if (*euler) {
      const auto e = catcube::euler_mod_p(euler_p);
      std::cout << "E_" << euler_p - 3 << " = " << e.value().get_str() << " (mod " << euler_p << ")\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
