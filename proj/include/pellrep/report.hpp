#pragma once

#include "pellrep/solver.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pellrep {

enum class OutputFormat { Json, Csv, Markdown };

OutputFormat parse_output_format(const std::string& text);

// Large integers are emitted as decimal strings and certified reals as
// {"lo", "hi"} pairs of strings rounded outward.
nlohmann::ordered_json to_json(const Interval& x, int digits = 10);
nlohmann::ordered_json to_json(const ConcatRepdigit& r);
nlohmann::ordered_json to_json(const Solution& s);
nlohmann::ordered_json to_json(const BoundLedger& ledger);
nlohmann::ordered_json to_json(const FamilyBound& family);
nlohmann::ordered_json to_json(const SolverReport& report);
nlohmann::ordered_json to_json(const ContinuedFraction& cf);

std::string render_solve(const SolverReport& report, OutputFormat format);
std::string render_bounds(const BoundLedger& ledger, OutputFormat format);
std::string render_reduce(const std::vector<FamilyBound>& families, OutputFormat format);
std::string render_contfrac(const ContinuedFraction& cf, OutputFormat format);
std::string render_check(const mpz_class& n, int base, const std::optional<ConcatRepdigit>& r,
                         OutputFormat format);

// RFC 4180 quoting of a single field.
std::string csv_field(const std::string& text);

}  // namespace pellrep
