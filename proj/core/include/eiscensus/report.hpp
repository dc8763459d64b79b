#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eiscensus/census.hpp"
#include "eiscensus/density.hpp"
#include "eiscensus/int128.hpp"

namespace eiscensus {

/// One (d, H) line of a census or convergence report. Densities are
/// normalized by (2H)^d.
struct ReportRow {
  CensusTally counts;
  double empirical_E_density = 0.0;
  double empirical_star_density = 0.0;
  std::optional<double> ratio_empirical;  // count_star / count_E; empty when count_E = 0
  double theta = 0.0;
  double theta_star = 0.0;
  double ratio_theoretical = 0.0;
  double alt_complement_density = 0.0;  // (count_A + count_B) / (2H)^d
};

ReportRow make_report_row(const CensusTally& counts, const DensityConstants& constants);

/// Which closed form an empirical ratio sits closer to.
///
/// Two accountings of the complement of E* are compared:
///   empirical  count_star / count_E, the literal set definitions
///   alt        (count_E - count_A - count_B) / count_E, the sets the
///              Möbius sums over squarefree moduli actually count
/// against θ*/θ and against the closed form for the literal sets.
struct ConvergenceSummary {
  std::uint64_t height = 0;
  std::optional<double> ratio_empirical;
  std::optional<double> ratio_alt_empirical;
  double ratio_theoretical = 0.0;
  double ratio_prose_theoretical = 0.0;
  std::optional<double> dev_empirical_vs_theoretical;
  std::optional<double> dev_empirical_vs_prose;
  std::optional<double> dev_alt_vs_theoretical;
  std::optional<double> dev_alt_vs_prose;
  double E_density_deviation = 0.0;  // |empirical_E_density - theta|
  std::string empirical_closest;     // "theoretical", "prose", or empty
  std::string alt_closest;
};

ConvergenceSummary summarize(const ReportRow& row, const DensityConstants& constants);

enum class Format { Csv, Json };

/// A flat record: ordered (column, value) pairs. An empty cell is null.
using Cell = std::variant<std::monostate, std::uint64_t, Count, double, std::string>;
using Record = std::vector<std::pair<std::string, Cell>>;

Record to_record(const ReportRow& row);
Record to_record(const ConvergenceSummary& summary);
Record to_record(const DensityConstants& constants);
/// (d, prime_bound, theta, theta_star, ratio)
Record to_table_record(const DensityConstants& constants);

/// Shortest decimal that round-trips to the same double.
std::string format_real(double value);

/// Header row plus one line per record. Columns come from `header`, so an
/// empty table still gets its header.
void write_csv(std::ostream& os, std::span<const std::string> header, std::span<const Record> records);

/// {"meta": {...}, "<section>": [...], ...}
void write_json(std::ostream& os, const Record& meta,
                std::span<const std::pair<std::string, std::vector<Record>>> sections);

/// Column names of a ReportRow record, in CSV order.
std::vector<std::string> report_columns();
std::vector<std::string> summary_columns();
std::vector<std::string> constants_columns();
std::vector<std::string> table_columns();

}  // namespace eiscensus
