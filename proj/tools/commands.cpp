#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "eiscensus/arith.hpp"
#include "eiscensus/census.hpp"
#include "eiscensus/density.hpp"
#include "eiscensus/errors.hpp"
#include "eiscensus/moebius.hpp"
#include "eiscensus/report.hpp"

namespace eiscensus::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::uint64_t prime_bound = 1'000'000;
  std::string format = "csv";
  std::string out_path;
};

struct CensusFlags {
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t budget = 1'000'000'000;
  std::string mode = "both";
};

void add_common(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("--prime-bound", common.prime_bound, "Truncation bound P for the Euler products")
      ->envname("EISCENSUS_PRIME_BOUND")
      ->check(CLI::Range(std::uint64_t{2}, FactorSieve::kMaxLimit))
      ->capture_default_str();
  cmd->add_option("--format", common.format, "Output format")
      ->envname("EISCENSUS_FORMAT")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", common.out_path, "Write the report to FILE instead of standard output");
}

void add_census_flags(CLI::App* cmd, CensusFlags& flags) {
  cmd->add_option("--workers", flags.workers, "Threads for brute-force enumeration")
      ->envname("EISCENSUS_WORKERS")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  cmd->add_option("--budget", flags.budget, "Largest grid (2H+1)^d the brute engine will walk")
      ->envname("EISCENSUS_BUDGET")
      ->capture_default_str();
}

void require_odd_prime(unsigned d) {
  if (!is_odd_prime(d)) {
    throw UsageError("--d " + std::to_string(d) + " rejected: d an odd prime is required");
  }
}

Format parse_format(const std::string& name) { return name == "json" ? Format::Json : Format::Csv; }

Record make_meta(const std::string& command, std::vector<std::pair<std::string, Cell>> extra) {
  Record meta{{"command", command}, {"version", std::string(kVersion)}};
  for (auto& field : extra) meta.push_back(std::move(field));
  return meta;
}

// Writes to --out when given, else to the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open --out file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// Runs the requested engines; throws EngineMismatchError (after printing the
// diff) when both ran and disagree.
CensusTally run_census(unsigned d, std::uint64_t height, const std::string& mode, const CensusFlags& flags,
                       const FactorSieve& sieve, std::ostream& err) {
  std::optional<CensusTally> brute;
  std::optional<CensusTally> exact;
  if (mode == "brute" || mode == "both") {
    brute = enumerate_census(d, height, sieve, CensusOptions{flags.budget, flags.workers});
  }
  if (mode == "exact" || mode == "both") exact = exact_set_counts(d, height, sieve);
  if (brute && exact) {
    const std::string diff = engine_diff(*brute, *exact);
    if (!diff.empty()) {
      err << diff << '\n';
      throw EngineMismatchError("brute and exact engines disagree at d = " + std::to_string(d) +
                                ", H = " + std::to_string(height));
    }
  }
  return brute ? *brute : *exact;
}

void emit_rows(std::ostream& os, Format format, const Record& meta, const std::vector<Record>& rows) {
  if (format == Format::Csv) {
    const auto header = report_columns();
    write_csv(os, header, rows);
  } else {
    const std::vector<std::pair<std::string, std::vector<Record>>> sections{{"rows", rows}};
    write_json(os, meta, sections);
  }
}

}  // namespace

std::string engine_diff(const CensusTally& brute, const CensusTally& exact) {
  std::ostringstream fields;
  bool any = false;
  auto check = [&](const char* name, Count a, Count b) {
    if (a == b) return;
    fields << (any ? ", " : "") << "{\"field\": \"" << name << "\", \"brute\": " << to_string(a)
           << ", \"exact\": " << to_string(b) << "}";
    any = true;
  };
  check("total", brute.total, exact.total);
  check("count_E", brute.count_E, exact.count_E);
  check("count_E1_prose", brute.count_E1_prose, exact.count_E1_prose);
  check("count_E2_prose", brute.count_E2_prose, exact.count_E2_prose);
  check("count_A", brute.count_A, exact.count_A);
  check("count_B", brute.count_B, exact.count_B);
  check("count_star", brute.count_star, exact.count_star);
  if (!any) return {};
  std::ostringstream os;
  os << "{\"error\": \"engine mismatch\", \"d\": " << brute.d << ", \"H\": " << brute.height
     << ", \"fields\": [" << fields.str() << "]}";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts monic Eisenstein polynomials of odd prime degree and their genus-condition densities",
               "eiscensus"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  CommonOptions common;
  CensusFlags census_flags;
  unsigned d = 0;
  std::uint64_t height = 0;
  std::uint64_t max_height = 0;
  std::vector<std::uint64_t> heights;
  std::vector<unsigned> d_list;

  auto* constants_cmd = app.add_subcommand("constants", "Euler-product densities theta, alpha, beta, theta*");
  constants_cmd->add_option("--d", d, "Degree (odd prime)")->required();
  add_common(constants_cmd, common);

  auto* census_cmd = app.add_subcommand("census", "Exact counts at one height");
  census_cmd->add_option("--d", d, "Degree (odd prime)")->required();
  census_cmd->add_option("--height", height, "Height bound H")->required()->check(CLI::PositiveNumber);
  census_cmd->add_option("--mode", census_flags.mode, "Counting engine")
      ->check(CLI::IsMember({"brute", "exact", "both"}))
      ->capture_default_str();
  add_census_flags(census_cmd, census_flags);
  add_common(census_cmd, common);

  auto* convergence_cmd = app.add_subcommand("convergence", "Exact counts over increasing heights vs theory");
  convergence_cmd->add_option("--d", d, "Degree (odd prime)")->required();
  convergence_cmd->add_option("--heights", heights, "Strictly increasing heights")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  add_common(convergence_cmd, common);

  auto* table_cmd = app.add_subcommand("table", "theta, theta*, and their ratio for several degrees");
  table_cmd->add_option("--d", d_list, "Degrees (odd primes), repeated or comma-separated")->delimiter(',');
  add_common(table_cmd, common);

  auto* validate_cmd = app.add_subcommand("validate", "Brute vs exact agreement over a height grid");
  validate_cmd->add_option("--d", d, "Degree (odd prime)")->required();
  auto* heights_opt = validate_cmd->add_option("--heights", heights, "Heights to check")
                          ->delimiter(',')
                          ->check(CLI::PositiveNumber);
  auto* max_opt = validate_cmd->add_option("--max-height", max_height, "Check every H in [1, max]")
                      ->check(CLI::PositiveNumber);
  heights_opt->excludes(max_opt);
  add_census_flags(validate_cmd, census_flags);
  add_common(validate_cmd, common);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = parse_format(common.format);

    if (*constants_cmd) {
      require_odd_prime(d);
      const FactorSieve sieve(common.prime_bound);
      const DensityConstants k = density_constants(d, common.prime_bound, sieve);
      const std::vector<Record> rows{to_record(k)};
      Sink sink(common.out_path, out);
      if (format == Format::Csv) {
        write_csv(sink.stream(), constants_columns(), rows);
      } else {
        const Record meta = make_meta("constants", {{"d", std::uint64_t{d}}, {"prime_bound", common.prime_bound}});
        const std::vector<std::pair<std::string, std::vector<Record>>> sections{{"rows", rows}};
        write_json(sink.stream(), meta, sections);
      }
      return kExitOk;
    }

    if (*table_cmd) {
      for (unsigned each : d_list) require_odd_prime(each);
      std::sort(d_list.begin(), d_list.end());
      d_list.erase(std::unique(d_list.begin(), d_list.end()), d_list.end());
      std::vector<Record> rows;
      if (!d_list.empty()) {
        const FactorSieve sieve(common.prime_bound);
        for (unsigned each : d_list) rows.push_back(to_table_record(density_constants(each, common.prime_bound, sieve)));
      }
      Sink sink(common.out_path, out);
      if (format == Format::Csv) {
        write_csv(sink.stream(), table_columns(), rows);
      } else {
        const Record meta = make_meta("table", {{"prime_bound", common.prime_bound}});
        const std::vector<std::pair<std::string, std::vector<Record>>> sections{{"rows", rows}};
        write_json(sink.stream(), meta, sections);
      }
      return kExitOk;
    }

    require_odd_prime(d);

    if (*census_cmd) {
      checked_grid_size(d, height);
      const FactorSieve sieve(std::max({height, common.prime_bound, std::uint64_t{2}}));
      const DensityConstants k = density_constants(d, common.prime_bound, sieve);
      const CensusTally tally = run_census(d, height, census_flags.mode, census_flags, sieve, err);
      const std::vector<Record> rows{to_record(make_report_row(tally, k))};
      Sink sink(common.out_path, out);
      emit_rows(sink.stream(), format,
                make_meta("census", {{"d", std::uint64_t{d}},
                                     {"H", height},
                                     {"mode", census_flags.mode},
                                     {"prime_bound", common.prime_bound}}),
                rows);
      return kExitOk;
    }

    if (*convergence_cmd) {
      for (std::size_t i = 1; i < heights.size(); ++i) {
        if (heights[i] <= heights[i - 1]) throw UsageError("--heights must be strictly increasing");
      }
      if (heights.empty()) throw UsageError("--heights needs at least one value");
      checked_grid_size(d, heights.back());
      const FactorSieve sieve(std::max({heights.back(), common.prime_bound, std::uint64_t{2}}));
      const DensityConstants k = density_constants(d, common.prime_bound, sieve);
      std::vector<Record> rows;
      std::vector<Record> summary;
      for (std::uint64_t h : heights) {
        const ReportRow row = make_report_row(exact_set_counts(d, h, sieve), k);
        rows.push_back(to_record(row));
        summary.push_back(to_record(summarize(row, k)));
      }
      Sink sink(common.out_path, out);
      if (format == Format::Csv) {
        write_csv(sink.stream(), report_columns(), rows);
        sink.stream() << '\n';
        write_csv(sink.stream(), summary_columns(), summary);
      } else {
        const Record meta = make_meta("convergence", {{"d", std::uint64_t{d}},
                                                      {"mode", std::string("exact")},
                                                      {"prime_bound", common.prime_bound},
                                                      {"ratio_theoretical", k.ratio},
                                                      {"ratio_prose_theoretical", k.ratio_prose}});
        const std::vector<std::pair<std::string, std::vector<Record>>> sections{{"rows", rows},
                                                                                {"summary", summary}};
        write_json(sink.stream(), meta, sections);
      }
      return kExitOk;
    }

    if (*validate_cmd) {
      if (max_height > 0) {
        heights.clear();
        for (std::uint64_t h = 1; h <= max_height; ++h) heights.push_back(h);
      }
      if (heights.empty()) throw UsageError("validate needs --heights or --max-height");
      const std::uint64_t top = *std::max_element(heights.begin(), heights.end());
      checked_grid_size(d, top);
      const FactorSieve sieve(std::max({top, common.prime_bound, std::uint64_t{2}}));
      const DensityConstants k = density_constants(d, common.prime_bound, sieve);
      std::vector<Record> rows;
      for (std::uint64_t h : heights) {
        rows.push_back(to_record(make_report_row(run_census(d, h, "both", census_flags, sieve, err), k)));
      }
      Sink sink(common.out_path, out);
      emit_rows(sink.stream(), format,
                make_meta("validate", {{"d", std::uint64_t{d}},
                                       {"mode", std::string("both")},
                                       {"prime_bound", common.prime_bound}}),
                rows);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const EngineMismatchError& e) {
    err << "engine mismatch: " << e.what() << '\n';
    return kExitEngineMismatch;
  }
  return kExitUsage;
}

}  // namespace eiscensus::cli
