#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "simplexstep/harness.hpp"

namespace simplexstep {

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double x);

/// Strict parse of a whole field; throws ParseError.
double parse_double(std::string_view field);

/// Comma-separated reals, e.g. "0.2,0.3,0.5".
std::vector<double> parse_real_list(std::string_view text);

/// A table of text cells with a header row.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(std::string_view name) const;  ///< throws ParseError if absent
  double number(std::size_t row, std::string_view name) const;
};

void write_csv(std::ostream& out, const Table& table);
/// Reads CSV written by write_csv (no quoting). Throws ParseError on ragged rows.
Table read_csv(std::istream& in);

/// Array of objects keyed by header; numeric cells become JSON numbers, empty cells null.
void write_json(std::ostream& out, const Table& table);

/// "t,p_0,...,p_{C-1},kl_to_target,b_entropy,eta_eff,eta_max,ratio"
std::vector<std::string> metrics_header(std::size_t classes);
Table metrics_table(const std::vector<MetricsRow>& rows, std::size_t classes);

/// "x,eta_max,b_entropy,eta_ce"
std::vector<std::string> sweep_header();
Table sweep_table(const std::vector<SweepRow>& rows);

/// "strategy,kind,final_kl,converged_step,collapsed,max_ratio"; converged_step is empty when none.
Table summary_table(const std::vector<StrategyRun>& runs, const Target& target);

/**
 * Builds an experiment configuration from a JSON document. Fields that are
 * absent take their ExperimentConfig defaults. Throws ParseError for
 * malformed JSON or unknown keys and InvalidConfig for violated invariants.
 */
ExperimentConfig parse_experiment_config(std::string_view json_text);

}  // namespace simplexstep
