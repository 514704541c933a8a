#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpqs/gfcatalog.hpp"
#include "dpqs/rational.hpp"
#include "dpqs/strategies.hpp"

namespace dpqs {

inline constexpr const char* kReportSchemaVersion = "dpqs-lab v1";

enum class PathId { enumeration, mc, dp, gf, formula, asym };
std::string to_string(PathId p);

// Registered discrepancy of a printed closed form against the exact oracles
// (recurrence DP / enumeration / generating functions, which agree with each
// other). delta(n) is the expected printed-minus-oracle value.
struct KnownDiscrepancy {
  const char* id;
  StrategyId strategy;
  std::optional<int> j;  // nullopt = grand average
  int min_n;
  Rational (*delta)(int n);
  const char* note;
};

std::span<const KnownDiscrepancy> known_discrepancies();

// Expected delta for a (strategy, j, n) cell if one is registered.
std::optional<Rational> registered_delta(StrategyId strategy, std::optional<int> j, int n);

// Registered misprints of printed generating functions: the delta series
// stated_gf - derived truth, pinned exactly. Adjudicated by the derivation
// pipeline, the recurrence DP and enumeration, which agree with each other
// (and with the printed exact rank formulas).
struct KnownGfDiscrepancy {
  GfName name;
  const char* id;
  TruncSeries (*delta)(int order);
  const char* note;
};

std::span<const KnownGfDiscrepancy> known_gf_discrepancies();
std::optional<TruncSeries> registered_gf_delta(GfName name, int order);

struct ReportRow {
  StrategyId strategy;
  int n;
  std::optional<int> j;  // nullopt = grand
  PathId path;
  bool exact;
  Rational value_exact;     // when exact
  double value_float = 0.0; // when !exact
  bool has_delta = false;
  bool delta_exact = false;
  Rational delta_rat;
  double delta_float = 0.0;
  std::string provenance;
};

struct Finding {
  std::string id;
  StrategyId strategy;
  int n;
  std::optional<int> j;
  bool has_delta = false;
  Rational delta;
  bool registered = false;
  std::string note;
};

struct ConcordanceOptions {
  int n_max = 8;
  std::vector<StrategyId> strategies;
  long long mc_trials = 100000;
  std::uint64_t seed = 12345;
  int threads = 0;
  bool with_mc = true;
};

struct ConcordanceReport {
  ConcordanceOptions options;
  std::vector<ReportRow> rows;
  std::vector<Finding> findings;
  std::vector<std::string> hard_violations;
};

// Runs every available computation path over the requested cells and
// cross-checks them. Exact-path disagreements (enumeration vs DP vs GF) and
// symmetry breaks are hard violations; printed-formula deltas are findings.
ConcordanceReport build_concordance(const ConcordanceOptions& options);

void write_concordance_csv(const ConcordanceReport& report, std::ostream& os);
// include_timestamp adds a generated_at field (excluded from comparisons).
void write_concordance_json(const ConcordanceReport& report, std::ostream& os,
                            bool include_timestamp = true);

// Residual analysis of an asymptotic expansion against the float DP.
inline constexpr double kResidualSlopeBound = 0.05;
inline constexpr double kResidualRangeBound = 1.0;

struct ResidualTable {
  StrategyId strategy;
  std::optional<int> j;  // nullopt = grand; j = 0 means partition cost
  std::string expansion_kind;  // "printed" or "derived"
  std::vector<long> ns;
  std::vector<double> values;     // DP values
  std::vector<double> expansion;  // expansion values
  std::vector<double> residuals;
  double slope = 0.0;  // least-squares slope of residual against log n
  double range = 0.0;  // max - min residual
  bool bounded_verdict = false;
};

// Grid is 2^min_pow .. 2^max_pow. j empty = grand, j = 0 = partition cost.
// With printed = true the expansion is used exactly as printed; with false
// the oracle-derived log coefficients are used where the printed ones are
// misprinted (the partition expansions are identical either way).
ResidualTable asymptotic_residuals(StrategyId strategy, std::optional<int> j,
                                   int min_pow = 6, int max_pow = 12,
                                   bool printed = false);

void write_residuals_csv(const ResidualTable& table, std::ostream& os);
void write_residuals_json(const ResidualTable& table, std::ostream& os);

}  // namespace dpqs
