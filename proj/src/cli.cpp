#include "pellrep/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace pellrep {
namespace {

unsigned long parse_cap(const std::string& text) {
  std::size_t used = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw InvalidArgument("precision cap must be a positive integer, got '" + text + "'");
  }
  return value;
}

void validate(const CliConfig& c) {
  if (c.base_min < 2 || c.base_max > 10 || c.base_min > c.base_max) {
    throw InvalidArgument("bases must satisfy 2 <= base-min <= base-max <= 10");
  }
  if (c.precision_cap_bits < 256) throw InvalidArgument("precision cap must be at least 256 bits");
  if (c.command == Command::Contfrac) {
    if (c.expr.has_value() == c.expr_base.has_value()) {
      throw InvalidArgument("contfrac needs exactly one of --expr and --base");
    }
    if (c.terms && c.threshold) {
      throw InvalidArgument("contfrac takes --terms or --threshold, not both");
    }
  }
  if (c.command == Command::Check && (c.check_base < 2 || c.check_base > 10)) {
    throw InvalidArgument("check base must lie in [2, 10]");
  }
}

mpz_class parse_threshold(const std::string& text) {
  auto value = parse_expr(text).exact_value();
  if (!value || sgn(*value) <= 0) throw InvalidArgument("threshold must be a positive number");
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), value->get_num_mpz_t(), value->get_den_mpz_t());
  return out;
}

std::string execute(const CliConfig& c) {
  const PrecisionSchedule schedule{PrecisionSchedule{}.start_bits, c.precision_cap_bits};
  switch (c.command) {
    case Command::Solve:
      return render_solve(solve(c.sequence, c.base_min, c.base_max, schedule), c.format);
    case Command::Bounds:
      return render_bounds(derive_initial_bounds(c.sequence), c.format);
    case Command::Reduce: {
      const BoundLedger ledger = derive_initial_bounds(c.sequence);
      std::vector<FamilyBound> families;
      for (int b = c.base_min; b <= c.base_max; ++b) {
        FamilyBound l1 = reduce_l1(c.sequence, b, ledger, schedule);
        const long l1_max = l1.bound;
        families.push_back(std::move(l1));
        families.push_back(reduce_n(c.sequence, b, l1_max, ledger, schedule));
      }
      // Tables read better grouped by stage.
      std::stable_sort(families.begin(), families.end(),
                       [](const FamilyBound& a, const FamilyBound& b) { return a.stage < b.stage; });
      return render_reduce(families, c.format);
    }
    case Command::Contfrac: {
      const RealExpr tau = c.expr ? parse_expr(*c.expr) : tau_of_base(*c.expr_base);
      const ContinuedFraction cf =
          c.threshold ? expand_until_q_exceeds(tau, parse_threshold(*c.threshold), schedule)
                      : expand_terms(tau, c.terms.value_or(20), schedule);
      return render_contfrac(cf, c.format);
    }
    case Command::Check: {
      mpz_class n;
      if (n.set_str(c.check_value, 10) != 0 || n < 1) {
        throw InvalidArgument("check needs a positive decimal integer, got '" + c.check_value + "'");
      }
      return render_check(n, c.check_base, decompose(n, c.check_base), c.format);
    }
  }
  throw std::logic_error("unhandled command");
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::string text;
  try {
    text = execute(config);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "computation failed: " << e.what() << "\n";
    return kExitFailure;
  }
  if (config.output_path) {
    std::ofstream file(*config.output_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << *config.output_path << "\n";
      return kExitFailure;
    }
  } else {
    out << text;
  }
  return kExitOk;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const std::optional<std::string>& env_precision_cap) {
  CliConfig c;
  std::string sequence = "pell";
  std::string format = "json";
  std::optional<unsigned long> cap_flag;

  CLI::App app{"Pell and Pell-Lucas numbers that are concatenations of two repdigits", "pellrep"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--sequence", sequence, "pell or pell-lucas");
  app.add_option("--base-min", c.base_min, "smallest base (>= 2)");
  app.add_option("--base-max", c.base_max, "largest base (<= 10)");
  app.add_option("--precision-cap", cap_flag,
                 std::string("maximum working precision in bits (>= 256); overrides ") +
                     kPrecisionCapEnv);
  app.add_option("--format", format, "json, csv or markdown");
  app.add_option("--output", c.output_path, "write the report to this file");

  CLI::App* solve_cmd = app.add_subcommand("solve", "full pipeline and final solution set");
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "constants and initial bounds");
  CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduction tables per base");
  CLI::App* cf_cmd = app.add_subcommand("contfrac", "certified continued fraction expansion");
  cf_cmd->add_option("--expr", c.expr, "expression, e.g. \"log(2)/log(1+sqrt(2))\"");
  cf_cmd->add_option("--base", c.expr_base, "expand log(b)/log(alpha)");
  cf_cmd->add_option("--terms", c.terms, "number of partial quotients (default 20)");
  cf_cmd->add_option("--threshold", c.threshold, "expand until a denominator exceeds this");
  CLI::App* check_cmd = app.add_subcommand("check", "two-block decomposition of one integer");
  check_cmd->add_option("N", c.check_value, "positive integer")->required();
  check_cmd->add_option("b", c.check_base, "base in [2, 10]")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    c.sequence = parse_sequence_kind(sequence);
    c.format = parse_output_format(format);
    if (cap_flag) {
      c.precision_cap_bits = *cap_flag;
    } else if (env_precision_cap) {
      c.precision_cap_bits = parse_cap(*env_precision_cap);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (*solve_cmd) c.command = Command::Solve;
  if (*bounds_cmd) c.command = Command::Bounds;
  if (*reduce_cmd) c.command = Command::Reduce;
  if (*cf_cmd) c.command = Command::Contfrac;
  if (*check_cmd) c.command = Command::Check;
  return run(c, out, err);
}

}  // namespace pellrep
