#include "eiscensus/report.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace eiscensus {

namespace {

long double to_real(Count c) { return static_cast<long double>(c); }

double normalized(Count c, unsigned d, std::uint64_t height) {
  const long double scale = std::pow(2.0L * static_cast<long double>(height), static_cast<long double>(d));
  return static_cast<double>(to_real(c) / scale);
}

std::optional<double> fraction(Count num, Count den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(to_real(num) / to_real(den));
}

Cell optional_cell(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

std::optional<double> distance(const std::optional<double>& v, double target) {
  if (!v) return std::nullopt;
  return std::fabs(*v - target);
}

std::string closer(const std::optional<double>& to_theoretical, const std::optional<double>& to_prose) {
  if (!to_theoretical || !to_prose) return {};
  return *to_theoretical <= *to_prose ? "theoretical" : "prose";
}

std::string render_cell(const Cell& cell, Format format) {
  struct Visitor {
    Format format;
    std::string operator()(std::monostate) const { return format == Format::Json ? "null" : ""; }
    std::string operator()(std::uint64_t v) const { return std::to_string(v); }
    std::string operator()(Count v) const { return to_string(v); }
    std::string operator()(double v) const {
      if (!std::isfinite(v)) return format == Format::Json ? "null" : "";
      return format_real(v);
    }
    std::string operator()(const std::string& s) const {
      return format == Format::Json ? nlohmann::json(s).dump() : s;
    }
  };
  return std::visit(Visitor{format}, cell);
}

void write_json_object(std::ostream& os, const Record& record) {
  os << '{';
  for (std::size_t i = 0; i < record.size(); ++i) {
    if (i) os << ", ";
    os << nlohmann::json(record[i].first).dump() << ": " << render_cell(record[i].second, Format::Json);
  }
  os << '}';
}

}  // namespace

ReportRow make_report_row(const CensusTally& counts, const DensityConstants& constants) {
  if (counts.d != constants.d) throw std::invalid_argument("make_report_row: degree mismatch");
  ReportRow row;
  row.counts = counts;
  row.empirical_E_density = normalized(counts.count_E, counts.d, counts.height);
  row.empirical_star_density = normalized(counts.count_star, counts.d, counts.height);
  row.ratio_empirical = fraction(counts.count_star, counts.count_E);
  row.theta = constants.theta;
  row.theta_star = constants.theta_star;
  row.ratio_theoretical = constants.ratio;
  row.alt_complement_density = normalized(counts.count_A + counts.count_B, counts.d, counts.height);
  return row;
}

ConvergenceSummary summarize(const ReportRow& row, const DensityConstants& constants) {
  ConvergenceSummary s;
  s.height = row.counts.height;
  s.ratio_empirical = row.ratio_empirical;
  if (row.counts.count_E > 0) {
    s.ratio_alt_empirical =
        fraction(row.counts.count_E - row.counts.count_A - row.counts.count_B, row.counts.count_E);
  }
  s.ratio_theoretical = constants.ratio;
  s.ratio_prose_theoretical = constants.ratio_prose;
  s.dev_empirical_vs_theoretical = distance(s.ratio_empirical, s.ratio_theoretical);
  s.dev_empirical_vs_prose = distance(s.ratio_empirical, s.ratio_prose_theoretical);
  s.dev_alt_vs_theoretical = distance(s.ratio_alt_empirical, s.ratio_theoretical);
  s.dev_alt_vs_prose = distance(s.ratio_alt_empirical, s.ratio_prose_theoretical);
  s.E_density_deviation = std::fabs(row.empirical_E_density - row.theta);
  s.empirical_closest = closer(s.dev_empirical_vs_theoretical, s.dev_empirical_vs_prose);
  s.alt_closest = closer(s.dev_alt_vs_theoretical, s.dev_alt_vs_prose);
  return s;
}

std::vector<std::string> report_columns() {
  return {"d",
          "H",
          "total",
          "count_E",
          "count_E1_prose",
          "count_E2_prose",
          "count_A",
          "count_B",
          "count_star",
          "empirical_E_density",
          "empirical_star_density",
          "ratio_empirical",
          "theta",
          "theta_star",
          "ratio_theoretical",
          "alt_complement_density"};
}

Record to_record(const ReportRow& row) {
  const CensusTally& c = row.counts;
  return {
      {"d", std::uint64_t{c.d}},
      {"H", c.height},
      {"total", c.total},
      {"count_E", c.count_E},
      {"count_E1_prose", c.count_E1_prose},
      {"count_E2_prose", c.count_E2_prose},
      {"count_A", c.count_A},
      {"count_B", c.count_B},
      {"count_star", c.count_star},
      {"empirical_E_density", row.empirical_E_density},
      {"empirical_star_density", row.empirical_star_density},
      {"ratio_empirical", optional_cell(row.ratio_empirical)},
      {"theta", row.theta},
      {"theta_star", row.theta_star},
      {"ratio_theoretical", row.ratio_theoretical},
      {"alt_complement_density", row.alt_complement_density},
  };
}

std::vector<std::string> summary_columns() {
  return {"H",
          "ratio_empirical",
          "ratio_alt_empirical",
          "ratio_theoretical",
          "ratio_prose_theoretical",
          "dev_empirical_vs_theoretical",
          "dev_empirical_vs_prose",
          "dev_alt_vs_theoretical",
          "dev_alt_vs_prose",
          "E_density_deviation",
          "empirical_closest",
          "alt_closest"};
}

Record to_record(const ConvergenceSummary& s) {
  return {
      {"H", s.height},
      {"ratio_empirical", optional_cell(s.ratio_empirical)},
      {"ratio_alt_empirical", optional_cell(s.ratio_alt_empirical)},
      {"ratio_theoretical", s.ratio_theoretical},
      {"ratio_prose_theoretical", s.ratio_prose_theoretical},
      {"dev_empirical_vs_theoretical", optional_cell(s.dev_empirical_vs_theoretical)},
      {"dev_empirical_vs_prose", optional_cell(s.dev_empirical_vs_prose)},
      {"dev_alt_vs_theoretical", optional_cell(s.dev_alt_vs_theoretical)},
      {"dev_alt_vs_prose", optional_cell(s.dev_alt_vs_prose)},
      {"E_density_deviation", s.E_density_deviation},
      {"empirical_closest", s.empirical_closest.empty() ? Cell{} : Cell{s.empirical_closest}},
      {"alt_closest", s.alt_closest.empty() ? Cell{} : Cell{s.alt_closest}},
  };
}

std::vector<std::string> constants_columns() {
  return {"d", "prime_bound", "theta", "alpha", "beta", "theta_star", "ratio", "tail_bound"};
}

Record to_record(const DensityConstants& k) {
  return {
      {"d", std::uint64_t{k.d}},
      {"prime_bound", k.prime_bound},
      {"theta", k.theta},
      {"alpha", k.alpha},
      {"beta", k.beta},
      {"theta_star", k.theta_star},
      {"ratio", k.ratio},
      {"tail_bound", k.tail_bound},
  };
}

std::vector<std::string> table_columns() { return {"d", "prime_bound", "theta", "theta_star", "ratio"}; }

Record to_table_record(const DensityConstants& k) {
  return {
      {"d", std::uint64_t{k.d}},
      {"prime_bound", k.prime_bound},
      {"theta", k.theta},
      {"theta_star", k.theta_star},
      {"ratio", k.ratio},
  };
}

std::string format_real(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

void write_csv(std::ostream& os, std::span<const std::string> header, std::span<const Record> records) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const Record& r : records) {
    if (r.size() != header.size()) throw std::logic_error("write_csv: record does not match header");
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << render_cell(r[i].second, Format::Csv);
    os << '\n';
  }
}

void write_json(std::ostream& os, const Record& meta,
                std::span<const std::pair<std::string, std::vector<Record>>> sections) {
  os << "{\n  \"meta\": ";
  write_json_object(os, meta);
  for (const auto& [name, records] : sections) {
    os << ",\n  " << nlohmann::json(name).dump() << ": [";
    for (std::size_t i = 0; i < records.size(); ++i) {
      os << (i ? ",\n    " : "\n    ");
      write_json_object(os, records[i]);
    }
    os << (records.empty() ? "]" : "\n  ]");
  }
  os << "\n}\n";
}

}  // namespace eiscensus
