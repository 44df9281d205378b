#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bas/constrained.hpp"
#include "bas/harness.hpp"
#include "bas/params.hpp"

namespace bas {

enum class ExportFormat { csv, json };

std::string to_string(ExportFormat format);
std::optional<ExportFormat> parse_export_format(std::string_view name);

// Shortest decimal form that parses back to the same double.
std::string format_double(double value);

// When present, per-run success flags are recomputed from this reference and
// included in the output.
struct SuccessCriterion {
  std::vector<double> x_star;
  double lb = 0.0;
  double ub = 0.0;
};

struct ExportOptions {
  std::optional<SuccessCriterion> success;
  // When set, a per-run feasibility report at x_best is added to JSON output.
  const ConstrainedProblem* problem = nullptr;
  bool include_trace = false;
};

// CSV: exactly the header `run,seed,f_best,evaluations,success` and one row
// per run; floats use the shortest round-trip decimal form; the success cell
// is empty when no criterion is given. JSON: an object with keys `stats` and
// `runs`; empty traces are omitted. Lines are LF-terminated.
std::string format_results(const ExperimentStats& stats, const std::vector<RunResult>& results,
                           ExportFormat format, const ExportOptions& options = {});

// Writes format_results to `destination`; throws std::runtime_error naming the
// path on I/O failure.
void export_results(const ExperimentStats& stats, const std::vector<RunResult>& results,
                    ExportFormat format, const std::filesystem::path& destination,
                    const ExportOptions& options = {});

}  // namespace bas
