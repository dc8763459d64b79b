#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "eiscensus/moebius.hpp"
#include "eiscensus/report.hpp"
#include "json.hpp"

namespace eiscensus {
namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(line);
  while (std::getline(is, item, sep)) out.push_back(item);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) rows.push_back(split(line, ','));
  return rows;
}

const FactorSieve& sieve() {
  static const FactorSieve s(100'000);
  return s;
}

TEST(ReportRow, FieldsFromTally) {
  const DensityConstants k = density_constants(3, 100'000, sieve());
  const ReportRow row = make_report_row(exact_set_counts(3, 7, sieve()), k);
  EXPECT_DOUBLE_EQ(row.empirical_E_density, 314.0 / (14.0 * 14.0 * 14.0));
  EXPECT_DOUBLE_EQ(row.empirical_star_density, 288.0 / (14.0 * 14.0 * 14.0));
  ASSERT_TRUE(row.ratio_empirical.has_value());
  EXPECT_DOUBLE_EQ(*row.ratio_empirical, 288.0 / 314.0);
  EXPECT_DOUBLE_EQ(row.alt_complement_density, 20.0 / (14.0 * 14.0 * 14.0));
  EXPECT_EQ(row.theta, k.theta);
  EXPECT_EQ(row.ratio_theoretical, k.ratio);
}

TEST(ReportRow, EmptyEisensteinSetHasNoRatio) {
  const DensityConstants k = density_constants(3, 1000, sieve());
  const ReportRow row = make_report_row(exact_set_counts(3, 1, sieve()), k);
  EXPECT_FALSE(row.ratio_empirical.has_value());

  std::ostringstream csv;
  const std::vector<Record> records{to_record(row)};
  write_csv(csv, report_columns(), records);
  const auto table = parse_csv(csv.str());
  ASSERT_EQ(table.size(), 2u);
  EXPECT_EQ(table[1][11], "");

  std::ostringstream js;
  const std::vector<std::pair<std::string, std::vector<Record>>> sections{{"rows", records}};
  write_json(js, Record{{"command", std::string("test")}}, sections);
  EXPECT_EQ(js.str().find("NaN"), std::string::npos);
  const auto doc = nlohmann::json::parse(js.str());
  EXPECT_TRUE(doc["rows"][0]["ratio_empirical"].is_null());
}

TEST(ReportRow, CsvHeaderOrder) {
  std::ostringstream csv;
  write_csv(csv, report_columns(), std::vector<Record>{});
  EXPECT_EQ(csv.str(),
            "d,H,total,count_E,count_E1_prose,count_E2_prose,count_A,count_B,count_star,"
            "empirical_E_density,empirical_star_density,ratio_empirical,theta,theta_star,"
            "ratio_theoretical,alt_complement_density\n");
}

TEST(ReportRow, CsvAndJsonCarryIdenticalNumbers) {
  const DensityConstants k = density_constants(3, 100'000, sieve());
  std::vector<Record> records;
  for (std::uint64_t h : {1u, 2u, 7u, 50u, 999u, 5000u}) {
    records.push_back(to_record(make_report_row(exact_set_counts(3, h, sieve()), k)));
  }
  std::ostringstream csv;
  std::ostringstream js;
  write_csv(csv, report_columns(), records);
  const std::vector<std::pair<std::string, std::vector<Record>>> sections{{"rows", records}};
  write_json(js, Record{{"command", std::string("test")}}, sections);

  const auto table = parse_csv(csv.str());
  const auto doc = nlohmann::json::parse(js.str());
  ASSERT_EQ(table.size(), records.size() + 1);
  const auto& header = table[0];
  for (std::size_t r = 0; r < records.size(); ++r) {
    const auto& obj = doc["rows"][r];
    ASSERT_EQ(obj.size(), header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      const std::string& text = table[r + 1][c];
      const auto& value = obj.at(header[c]);
      if (text.empty()) {
        EXPECT_TRUE(value.is_null()) << header[c];
      } else if (value.is_number_float()) {
        EXPECT_EQ(std::strtod(text.c_str(), nullptr), value.get<double>()) << header[c];
      } else {
        EXPECT_EQ(text, value.dump()) << header[c];
      }
    }
  }
}

TEST(Format, ShortestRoundTrip) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 20000; ++i) {
    const double v = std::ldexp(u(rng), static_cast<int>(rng() % 200) - 100);
    ASSERT_EQ(std::strtod(format_real(v).c_str(), nullptr), v);
  }
  EXPECT_EQ(format_real(0.5), "0.5");
  EXPECT_EQ(format_real(1.0), "1");
}

TEST(Format, WideCounts) {
  EXPECT_EQ(to_string(Count{0}), "0");
  EXPECT_EQ(to_string((Count{1} << 100)), "1267650600228229401496703205376");
  EXPECT_EQ(to_string(SignedCount{-42}), "-42");
}

TEST(Summary, ComparesBothAccountings) {
  const DensityConstants k = density_constants(3, 100'000, sieve());
  const ReportRow row = make_report_row(exact_set_counts(3, 2000, sieve()), k);
  const ConvergenceSummary s = summarize(row, k);
  ASSERT_TRUE(s.ratio_alt_empirical.has_value());
  const auto& c = row.counts;
  EXPECT_DOUBLE_EQ(*s.ratio_alt_empirical,
                   static_cast<double>(c.count_E - c.count_A - c.count_B) / static_cast<double>(c.count_E));
  EXPECT_DOUBLE_EQ(*s.dev_alt_vs_theoretical, std::fabs(*s.ratio_alt_empirical - k.ratio));
  EXPECT_DOUBLE_EQ(*s.dev_empirical_vs_prose, std::fabs(*s.ratio_empirical - k.ratio_prose));
  EXPECT_TRUE(s.empirical_closest == "theoretical" || s.empirical_closest == "prose");
  EXPECT_DOUBLE_EQ(s.E_density_deviation, std::fabs(row.empirical_E_density - k.theta));

  const ConvergenceSummary empty = summarize(make_report_row(exact_set_counts(3, 1, sieve()), k), k);
  EXPECT_FALSE(empty.ratio_alt_empirical.has_value());
  EXPECT_TRUE(empty.empirical_closest.empty());
}

}  // namespace
}  // namespace eiscensus
