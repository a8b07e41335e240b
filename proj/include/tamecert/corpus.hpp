#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tamecert/report.hpp"

namespace tamecert::pipeline {

struct CorpusEntry {
  std::string file;
  /// Fixture name, or the file stem when the fixture did not parse.
  std::string name;
  std::optional<AnalysisReport> report;
  std::optional<std::string> error;
};

struct CorpusSummary {
  std::vector<CorpusEntry> entries;
  std::size_t feasible = 0;
  std::size_t infeasible = 0;
  std::size_t unknown = 0;
  std::size_t errors = 0;
  std::size_t applicable = 0;
  std::size_t inconsistencies = 0;
  /// Priority: inconsistency (2), input error (1), Unknown (3), success (0).
  int exit_code = 0;
};

/// Analyzes every *.json file in dir with `jobs` worker threads. Per-fixture failures are
/// collected as error entries. Entries are ordered by name, then by file.
CorpusSummary corpus_run(const std::filesystem::path& dir, const feasibility::Config& config = {}, std::size_t jobs = 1);

nlohmann::json to_json(const CorpusSummary& s);
std::string format_summary(const CorpusSummary& s);

}  // namespace tamecert::pipeline
