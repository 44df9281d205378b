#include "bas/results_io.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <system_error>

#include <json.hpp>

namespace bas {

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

nlohmann::json stats_to_json(const ExperimentStats& stats) {
  nlohmann::json j{
      {"best_f", stats.best_f},
      {"mean_f", stats.mean_f},
      {"std_f", stats.std_f},
      {"n_runs", stats.n_runs},
  };
  if (stats.success_rate) j["success_rate"] = *stats.success_rate;
  return j;
}

std::string format_csv(const std::vector<RunResult>& results, const ExportOptions& options) {
  std::string out = "run,seed,f_best,evaluations,success\n";
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    out += std::to_string(i);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += format_double(r.f_best);
    out += ',';
    out += std::to_string(r.evaluations);
    out += ',';
    if (options.success) {
      const auto& c = *options.success;
      out += is_success(r.x_best, c.x_star, c.lb, c.ub) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::string format_json(const ExperimentStats& stats, const std::vector<RunResult>& results,
                        const ExportOptions& options) {
  nlohmann::json runs = nlohmann::json::array();
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& r = results[i];
    nlohmann::json run{
        {"run", i},
        {"seed", r.seed},
        {"f_best", r.f_best},
        {"evaluations", r.evaluations},
        {"x_best", r.x_best},
    };
    if (options.success) {
      const auto& c = *options.success;
      run["success"] = is_success(r.x_best, c.x_star, c.lb, c.ub);
    }
    if (options.problem) {
      const auto report = feasibility(*options.problem, r.x_best);
      run["feasibility"] = {
          {"constraint_values", report.constraint_values},
          {"max_violation", report.max_violation},
          {"in_bounds", report.in_bounds},
      };
    }
    if (options.include_trace && !r.trace.empty()) {
      run["trace"] = r.trace;
    }
    runs.push_back(std::move(run));
  }
  nlohmann::json doc{{"stats", stats_to_json(stats)}, {"runs", std::move(runs)}};
  return doc.dump(2) + "\n";
}

}  // namespace

std::string to_string(ExportFormat format) {
  return format == ExportFormat::csv ? "csv" : "json";
}

std::optional<ExportFormat> parse_export_format(std::string_view name) {
  if (name == "csv") return ExportFormat::csv;
  if (name == "json") return ExportFormat::json;
  return std::nullopt;
}

std::string format_results(const ExperimentStats& stats, const std::vector<RunResult>& results,
                           ExportFormat format, const ExportOptions& options) {
  return format == ExportFormat::csv ? format_csv(results, options)
                                     : format_json(stats, results, options);
}

void export_results(const ExperimentStats& stats, const std::vector<RunResult>& results,
                    ExportFormat format, const std::filesystem::path& destination,
                    const ExportOptions& options) {
  std::ofstream out(destination);
  if (!out) {
    throw std::runtime_error("export_results: cannot open '" + destination.string() +
                             "' for writing");
  }
  out << format_results(stats, results, format, options);
  out.flush();
  if (!out) {
    throw std::runtime_error("export_results: write to '" + destination.string() + "' failed");
  }
}

}  // namespace bas
