#include "tamecert/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "tamecert/errors.hpp"

namespace tamecert::pipeline {

namespace fs = std::filesystem;

namespace {

CorpusEntry run_one(const fs::path& file, const feasibility::Config& config) {
  CorpusEntry e{file.filename().string(), file.stem().string(), std::nullopt, std::nullopt};
  try {
    const Fixture f = load_fixture(file);
    e.name = f.name;
    e.report = analyze(f, config);
  } catch (const std::exception& ex) {
    e.error = ex.what();
  }
  return e;
}

}  // namespace

CorpusSummary corpus_run(const fs::path& dir, const feasibility::Config& config, std::size_t jobs) {
  if (!fs::is_directory(dir)) throw ParseError("", "not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& de : fs::directory_iterator(dir))
    if (de.is_regular_file() && de.path().extension() == ".json") files.push_back(de.path());
  std::sort(files.begin(), files.end());

  CorpusSummary s;
  s.entries.resize(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) s.entries[i] = run_one(files[i], config);
  };
  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, files.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::stable_sort(s.entries.begin(), s.entries.end(), [](const CorpusEntry& a, const CorpusEntry& b) {
    return a.name != b.name ? a.name < b.name : a.file < b.file;
  });

  bool error = false, unknown = false, inconsistent = false;
  for (const auto& e : s.entries) {
    if (e.error) {
      ++s.errors;
      error = true;
      continue;
    }
    const auto& r = *e.report;
    if (r.feasibility) {
      if (r.feasibility->verdict == "Feasible") ++s.feasible;
      else if (r.feasibility->verdict == "Infeasible") ++s.infeasible;
      else ++s.unknown;
    }
    if (r.theorem_consistency.applicable) ++s.applicable;
    const int code = exit_code(r);
    if (code == exit_inconsistent) {
      ++s.inconsistencies;
      inconsistent = true;
    }
    unknown = unknown || code == exit_unknown;
  }
  s.exit_code = inconsistent ? exit_inconsistent : error ? exit_input_error : unknown ? exit_unknown : exit_ok;
  return s;
}

nlohmann::json to_json(const CorpusSummary& s) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : s.entries) {
    nlohmann::json j = {{"file", e.file}, {"name", e.name}};
    j["report"] = e.report ? to_json(*e.report) : nlohmann::json(nullptr);
    j["error"] = e.error ? nlohmann::json(*e.error) : nlohmann::json(nullptr);
    entries.push_back(std::move(j));
  }
  return {{"entries", entries},
          {"summary",
           {{"fixtures", s.entries.size()},
            {"feasible", s.feasible},
            {"infeasible", s.infeasible},
            {"unknown", s.unknown},
            {"errors", s.errors},
            {"theorem_applicable", s.applicable},
            {"inconsistencies", s.inconsistencies},
            {"exit_code", s.exit_code}}}};
}

std::string format_summary(const CorpusSummary& s) {
  std::ostringstream os;
  std::size_t width = 8;
  for (const auto& e : s.entries) width = std::max(width, e.name.size());
  auto pad = [](std::string x, std::size_t w) {
    x.resize(std::max(x.size(), w), ' ');
    return x;
  };
  os << pad("fixture", width) << "  dim  " << pad("verdict", 10) << "  abelian  theorem\n";
  for (const auto& e : s.entries) {
    os << pad(e.name, width) << "  ";
    if (e.error) {
      os << "ERROR: " << *e.error << "\n";
      continue;
    }
    const auto& r = *e.report;
    os << pad(std::to_string(r.dim), 3) << "  " << pad(r.feasibility ? r.feasibility->verdict : "-", 10) << "  "
       << pad(r.flags.abelian ? "yes" : "no", 7) << "  " << r.theorem_consistency.detail << "\n";
  }
  os << "\n"
     << s.entries.size() << " fixtures: " << s.feasible << " feasible, " << s.infeasible << " infeasible, " << s.unknown
     << " unknown, " << s.errors << " errors; theorem applicable to " << s.applicable << ", " << s.inconsistencies
     << " inconsistencies\n";
  return os.str();
}

}  // namespace tamecert::pipeline
