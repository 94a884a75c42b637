#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kplex/bounds.hpp"
#include "kplex/graph.hpp"
#include "kplex/solver.hpp"

namespace kplex::cli {

enum class RunStatus { kOptimal, kTimeout, kError };

std::string_view to_string(RunStatus status);

/// One solver run, one CSV row.
struct RunRecord {
  std::string instance;
  int k = 0;
  BoundKind bound = BoundKind::kRelaxPub;
  RunStatus status = RunStatus::kError;
  int size = 0;
  std::int64_t nodes = 0;
  std::int64_t time_ms = 0;
  std::int64_t color_wins = 0;
  std::int64_t partition_wins = 0;
  int percent_color = 0;  // permille
};

/// 1000 * color / (color + partition), truncated; 0 when both are zero.
int percent_color_permille(std::int64_t color_wins, std::int64_t partition_wins);

RunRecord make_record(std::string instance, int k, BoundKind bound, const SolveReport& report);

std::string_view csv_header();
std::string to_csv_row(const RunRecord& record);
/// Appends rows, writing the header first when the file is missing or empty.
void append_csv(const std::filesystem::path& path, const std::vector<RunRecord>& rows);

/// Entry point for the `kplex` executable. Returns the process exit code:
/// 0 on success (optimal or timeout), 2 on bad arguments or unreadable input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kplex::cli
