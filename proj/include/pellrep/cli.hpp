#pragma once

#include "pellrep/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pellrep {

enum class Command { Solve, Bounds, Reduce, Contfrac, Check };

struct CliConfig {
  Command command = Command::Solve;
  SequenceKind sequence = SequenceKind::Pell;
  int base_min = 2;
  int base_max = 10;
  unsigned long precision_cap_bits = PrecisionSchedule{}.cap_bits;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> output_path;

  // contfrac: either an expression or log(base)/log(alpha); either a term
  // count or a denominator threshold.
  std::optional<std::string> expr;
  std::optional<int> expr_base;
  std::optional<unsigned long> terms;
  std::optional<std::string> threshold;

  // check
  std::string check_value;
  int check_base = 10;
};

// Environment variable that overrides the default precision cap; an
// explicit --precision-cap flag still wins.
inline constexpr const char* kPrecisionCapEnv = "PELLREP_PRECISION_CAP";

enum ExitStatus { kExitOk = 0, kExitUsage = 1, kExitFailure = 2 };

// Data goes to `out` (or the --output file), diagnostics to `err`.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

// Parses argv, then runs. `env_precision_cap` is the value of
// PELLREP_PRECISION_CAP, if set.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
             const std::optional<std::string>& env_precision_cap = std::nullopt);

}  // namespace pellrep
