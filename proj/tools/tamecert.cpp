#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "tamecert/corpus.hpp"
#include "tamecert/errors.hpp"
#include "tamecert/json_writer.hpp"
#include "tamecert/proof_trace.hpp"
#include "tamecert/reduction.hpp"
#include "tamecert/structure.hpp"

using namespace tamecert;
using namespace tamecert::pipeline;
using nlohmann::json;

namespace {

struct Options {
  std::string path;
  bool json = false;
  feasibility::Config config;
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
};

void add_solver_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.config.seed, "RNG seed for the primal ascent");
  cmd->add_option("--eps-feas", o.config.tolerances.eps_feas, "primal margin threshold")->check(CLI::PositiveNumber);
  cmd->add_option("--eps-dual", o.config.tolerances.eps_dual, "dual residual threshold")->check(CLI::PositiveNumber);
  cmd->add_option("--restarts", o.config.budget.restarts, "ascent restarts")->check(CLI::PositiveNumber);
  cmd->add_option("--iters", o.config.budget.iterations, "iterations per restart")->check(CLI::PositiveNumber);
}

json trace_json(const ProofTraceRecord& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"Y", vector_json(e.y)},
                       {"a", rational_json(e.a)},
                       {"b", rational_json(e.b)},
                       {"Z1", vector_json(e.z1)},
                       {"trace_on_v", rational_json(e.trace_on_v)},
                       {"residuals_zero", e.residuals.all_zero()}});
  return {{"X", vector_json(r.x)},
          {"JX", vector_json(r.jx)},
          {"omega_X_JX", rational_json(r.sigma)},
          {"h_scalar", r.h_scalar ? rational_json(*r.h_scalar) : json(nullptr)},
          {"v_dim", r.v.dim()},
          {"entries", entries},
          {"reduced_unimodular", r.reduced_unimodular}};
}

int cmd_validate(const Options& o) {
  const Fixture f = load_fixture(o.path);
  std::cout << "ok: " << f.name << " (dim " << f.algebra.dim() << ", " << f.algebra.brackets().size()
            << " nonzero brackets, Jacobi verified)";
  if (f.J) std::cout << (forms::squares_to_minus_identity(*f.J) ? ", J^2 = -I" : ", J^2 != -I");
  if (f.omega) std::cout << ", omega " << (forms::d(f.algebra, *f.omega).is_zero() ? "closed" : "not closed");
  std::cout << "\n";
  return exit_ok;
}

int cmd_analyze(const Options& o) {
  const AnalysisReport r = analyze(load_fixture(o.path), o.config);
  if (o.json)
    std::cout << write_json(to_json(r)) << "\n";
  else
    std::cout << scope_header() << "\n\n" << format_report(r);
  return exit_code(r);
}

int cmd_tame(const Options& o) {
  const Fixture f = load_fixture(o.path);
  if (!f.J) throw ParseError("J", "tame needs a complex structure");
  const auto J = forms::ComplexStructure::create(*f.J);
  const FeasibilityReport r = summarize(feasibility::decide(f.algebra, J, o.config));
  if (o.json) {
    AnalysisReport wrapper;
    wrapper.feasibility = r;
    std::cout << write_json(to_json(wrapper).at("feasibility")) << "\n";
  } else {
    AnalysisReport shown;
    shown.name = f.name;
    shown.dim = f.algebra.dim();
    shown.j = {true, true, forms::is_integrable(f.algebra, J)};
    shown.feasibility = r;
    std::cout << scope_header() << "\n\n" << shown.name << " (dim " << shown.dim << ")\n";
    const std::string body = format_report(shown);
    const auto start = body.find("  taming:");
    std::cout << body.substr(start, body.find('\n', start) - start + 1);
  }
  return r.verdict == "Unknown" ? exit_unknown : exit_ok;
}

int cmd_reduce(const Options& o) {
  const Fixture f = load_fixture(o.path);
  if (!f.J) throw ParseError("J", "reduce needs a complex structure");
  if (!f.omega) throw ParseError("omega", "reduce needs a 2-form");
  const auto t = reduction::TamedTriple::create(f.algebra, *f.omega, *f.J);
  const auto tower = reduction::reduction_tower(t);

  json steps = json::array();
  const reduction::TamedTriple* current = &t;
  std::size_t k = 0;
  for (const auto& step : tower.steps) {
    const auto trace = proof_trace(*current, step.h);
    Fixture reduced{f.name + "/" + std::to_string(++k), step.reduced.algebra(), step.reduced.J().matrix(),
                    step.reduced.omega()};
    json perp = json::array();
    for (const auto& b : step.perp.basis()) perp.push_back(vector_json(b));
    const auto flags = reduction::TamedTriple::verify(step.reduced.algebra(), step.reduced.omega(), step.reduced.J().matrix());
    steps.push_back({{"dim", current->dim()},
                     {"generator", vector_json(step.generator)},
                     {"perp", perp},
                     {"reduced", to_json(reduced)},
                     {"flags",
                      {{"closed", flags.closed}, {"J_squared", flags.j_squared}, {"integrable", flags.integrable}, {"taming", flags.taming}}},
                     {"reduced_unimodular", is_unimodular(step.reduced.algebra()).unimodular},
                     {"proof_trace", trace_json(trace)}});
    current = &step.reduced;
  }
  if (o.json) {
    std::cout << write_json({{"name", f.name}, {"steps", steps}, {"terminal_dim", tower.terminal.dim()}, {"complete", tower.complete}})
              << "\n";
  } else {
    std::cout << scope_header() << "\n\n" << f.name << ": reduction tower";
    for (const auto& s : steps) std::cout << " " << s.at("dim").get<std::size_t>() << " ->";
    std::cout << " " << tower.terminal.dim() << (tower.complete ? " (complete)" : " (no rational line ideal left)") << "\n";
    for (const auto& s : steps) {
      const auto& fl = s.at("flags");
      bool zero = true;
      for (const auto& e : s.at("proof_trace").at("entries")) zero = zero && e.at("residuals_zero").get<bool>();
      std::cout << "  dim " << s.at("dim").get<std::size_t>() << ": X = " << s.at("generator").dump()
                << ", closed " << fl.at("closed") << ", J^2 = -I " << fl.at("J_squared") << ", integrable "
                << fl.at("integrable") << ", taming " << fl.at("taming") << ", proof-trace residuals "
                << (zero ? "zero" : "NONZERO") << "\n";
    }
  }
  return exit_ok;
}

int cmd_corpus(const Options& o) {
  const CorpusSummary s = corpus_run(o.path, o.config, o.jobs);
  if (o.json)
    std::cout << write_json(to_json(s)) << "\n";
  else
    std::cout << scope_header() << "\n\n" << format_summary(s);
  return s.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether closed 2-forms tame a complex structure on a Lie algebra"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "parse a fixture and check the Jacobi identity");
  validate->add_option("file", o.path, "fixture JSON")->required();

  auto* analyze_cmd = app.add_subcommand("analyze", "structure flags, taming verdict and theorem check");
  analyze_cmd->add_option("file", o.path, "fixture JSON")->required();
  analyze_cmd->add_flag("--json", o.json, "machine-readable report");
  add_solver_flags(analyze_cmd, o);

  auto* reduce_cmd = app.add_subcommand("reduce", "tamed symplectic reduction tower with proof traces");
  reduce_cmd->add_option("file", o.path, "fixture JSON with J and omega")->required();
  reduce_cmd->add_flag("--json", o.json, "machine-readable report");

  auto* tame_cmd = app.add_subcommand("tame", "taming verdict with certificates");
  tame_cmd->add_option("file", o.path, "fixture JSON with J")->required();
  tame_cmd->add_flag("--json", o.json, "machine-readable report");
  add_solver_flags(tame_cmd, o);

  auto* corpus_cmd = app.add_subcommand("corpus", "analyze every fixture in a directory");
  corpus_cmd->add_option("dir", o.path, "directory of fixture JSON files")->required();
  corpus_cmd->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  corpus_cmd->add_flag("--json", o.json, "machine-readable summary");
  add_solver_flags(corpus_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*analyze_cmd) return cmd_analyze(o);
    if (*reduce_cmd) return cmd_reduce(o);
    if (*tame_cmd) return cmd_tame(o);
    return cmd_corpus(o);
  } catch (const RelationViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_inconsistent;
  } catch (const TamingLost& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_inconsistent;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input_error;
  }
}
