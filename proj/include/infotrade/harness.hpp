#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "infotrade/bound_report.hpp"
#include "infotrade/generators.hpp"
#include "infotrade/measures.hpp"
#include "infotrade/protocol.hpp"

namespace infotrade {

struct ProtocolFamily {
  std::string name;
  std::optional<FunctionTable> target;  // used for the error columns
  std::function<ProtocolTree(double)> build;
};

/// Known families: "and-figure1", and "half-guess" (needs f).
ProtocolFamily family_by_name(const std::string& name, const std::optional<FunctionTable>& f = std::nullopt);

struct SweepRow {
  double epsilon = 0.0;
  double internal_bits = 0.0;
  double external_bits = 0.0;
  double worst_case_error = 0.0;
  double distributional_error = 0.0;
};

struct SweepTable {
  std::vector<SweepRow> rows;
};

/// Exact evaluation at every grid point (in parallel, rows in grid order).
/// Error columns are NaN when the family has no target function.
SweepTable sweep(const ProtocolFamily& family, const Measure& mu, std::span<const double> grid);

// Column order is fixed: epsilon,internal_bits,external_bits,worst_case_error,distributional_error
std::string to_csv(const SweepTable& table);
SweepTable sweep_from_csv(const std::string& text);

enum class SweepColumn { Internal, External, WorstCaseError, DistributionalError };
SweepColumn parse_column(const std::string& name);
const char* to_string(SweepColumn c);

struct QuadraticFit {
  double c2 = 0.0;
  double c4 = 0.0;
  double residual = 0.0;  // max |value - c2 eps^2 - c4 eps^4|
};

/// Least squares fit of value = c2 eps^2 + c4 eps^4. Needs >= 3 distinct eps.
QuadraticFit fit_quadratic(std::span<const double> eps, std::span<const double> values);
QuadraticFit fit_quadratic(const SweepTable& table, SweepColumn column);

struct FuzzConfig {
  std::uint64_t seed = 1;
  std::size_t instances = 100;
  std::size_t min_rows = 2, max_rows = 4;
  std::size_t min_cols = 2, max_cols = 4;
  int max_alphabet = 3;
  std::size_t max_depth = 5;
  double tolerance = 1e-9;        // inequality slack
  double exact_tolerance = 1e-12; // identities (mixing, zero error, closed forms)
  std::map<std::string, double> overrides;  // per-check tolerance, by report name
  std::vector<std::string> only;            // restrict to these checks (empty: all)

  static FuzzConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
  void check() const;  // throws DomainError / ResourceError
  double tolerance_for(const std::string& name, double fallback) const;
};

// Resource guards on fuzz sizes.
inline constexpr std::size_t kMaxFuzzSide = 6;
inline constexpr std::size_t kMaxFuzzDepth = 10;
inline constexpr std::size_t kMaxFuzzInstances = 1'000'000;

/// One family of randomized inequality checks; `run` draws an instance from rng.
struct FuzzCheck {
  std::string name;
  std::function<std::vector<BoundReport>(Rng&, const FuzzConfig&)> run;
};

const std::vector<FuzzCheck>& fuzz_checks();
const FuzzCheck& fuzz_check(const std::string& name);

/// Runs check `c` as instance `index` of a `seed`-ed run; reports get "check" and "instance" context.
std::vector<BoundReport> run_check(const FuzzCheck& c, std::uint64_t seed, std::uint64_t index, const FuzzConfig& cfg);

struct FuzzSummary {
  std::size_t instances = 0;
  std::size_t reports = 0;
  std::size_t violations = 0;
  std::map<std::string, std::size_t> reports_by_name;
  std::map<std::string, std::size_t> violations_by_name;
  std::map<std::string, double> min_slack_by_name;
  nlohmann::json to_json() const;
};

struct FuzzResult {
  std::vector<BoundReport> reports;  // instance-major, checks in registry order
  FuzzSummary summary;
};

FuzzResult fuzz_bounds(const FuzzConfig& config);
FuzzSummary summarize(std::span<const BoundReport> reports, std::size_t instances);

}  // namespace infotrade
