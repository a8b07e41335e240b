#include "tamecert/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "tamecert/errors.hpp"
#include "tamecert/proof_trace.hpp"
#include "tamecert/reduction.hpp"
#include "tamecert/structure.hpp"

namespace tamecert::pipeline {

using nlohmann::json;

namespace {

std::vector<std::string> strings(const Vector& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

AlgebraFlags algebra_flags(const LieAlgebra& g) {
  AlgebraFlags f;
  const auto cs = is_completely_solvable(g);
  f.solvable = cs.solvable;
  f.completely_solvable = cs.completely_solvable;
  if (cs.witness) f.complete_solvability_witness = g.labels()[*cs.witness];
  f.nilpotent = is_nilpotent(g);
  const auto um = is_unimodular(g);
  f.unimodular = um.unimodular;
  if (um.witness) {
    f.unimodular_witness = g.labels()[*um.witness];
    f.unimodular_witness_trace = to_string(um.witness_trace);
  }
  f.abelian = g.is_abelian();
  return f;
}

ReductionSummary summarize_reduction(const Fixture& f) {
  ReductionSummary s;
  const auto flags = reduction::TamedTriple::verify(f.algebra, *f.omega, *f.J);
  if (!flags.all()) {
    s.failure = "input triple fails '" + flags.first_failure() + "'";
    return s;
  }
  s.tamed = true;
  const auto t = reduction::TamedTriple::create(f.algebra, *f.omega, *f.J);
  s.dimensions.push_back(t.dim());
  try {
    const auto tower = reduction::reduction_tower(t);
    s.complete = tower.complete;
    const reduction::TamedTriple* current = &t;
    for (const auto& step : tower.steps) {
      s.generators.push_back(strings(step.generator));
      s.dimensions.push_back(step.reduced.dim());
      if (is_unimodular(current->algebra()).unimodular && !is_unimodular(step.reduced.algebra()).unimodular)
        s.unimodular_preserved = false;
      if (!s.proof_trace_violation) {
        try {
          proof_trace(*current, step.h);
          ++s.proof_traces;
        } catch (const RelationViolation& e) {
          s.proof_trace_violation = e.what();
        }
      }
      current = &step.reduced;
    }
  } catch (const TamingLost& e) {
    s.failure = e.what();
  }
  return s;
}

}  // namespace

FeasibilityReport summarize(const feasibility::Verdict& v) {
  FeasibilityReport r;
  r.verdict = feasibility::verdict_kind(v);
  if (const auto* f = std::get_if<feasibility::Feasible>(&v)) {
    r.lambda_min = f->lambda_min;
    r.exact_pd = f->exact_pd;
    r.omega = strings(f->omega.coefficients());
  } else if (const auto* inf = std::get_if<feasibility::Infeasible>(&v)) {
    r.lambda_min = inf->best_primal;
    r.dual_residual = inf->residual;
    std::vector<std::vector<double>> rows;
    for (Eigen::Index i = 0; i < inf->dual.rows(); ++i) {
      rows.emplace_back();
      for (Eigen::Index j = 0; j < inf->dual.cols(); ++j) rows.back().push_back(inf->dual(i, j));
    }
    r.dual = std::move(rows);
    if (inf->rank_one_direction) {
      r.rank_one_direction = strings(inf->rank_one_direction->v);
      r.degeneracy_source = feasibility::to_string(inf->rank_one_direction->source);
    }
  } else {
    const auto& u = std::get<feasibility::Unknown>(v);
    r.lambda_min = u.best_lambda_min;
    r.dual_residual = u.dual_residual;
    r.degeneracy_log = "no rank-one direction in the derived algebra, nilradical center or generalized "
                       "eigenspaces; best primal " + fmt(u.best_lambda_min) + ", dual residual " + fmt(u.dual_residual);
  }
  return r;
}

AnalysisReport analyze(const Fixture& f, const feasibility::Config& config) {
  AnalysisReport r;
  r.name = f.name;
  r.dim = f.algebra.dim();
  r.flags = algebra_flags(f.algebra);

  std::optional<forms::ComplexStructure> J;
  if (f.J) {
    r.j.present = true;
    try {
      J = forms::ComplexStructure::create(*f.J);
      r.j.j_squared_ok = true;
    } catch (const NotAComplexStructure& e) {
      r.warnings.push_back(std::string("J rejected: ") + e.what());
    }
    if (J) {
      r.j.integrable = forms::is_integrable(f.algebra, *J);
      if (!r.j.integrable) r.warnings.push_back("J is not integrable; feasibility is still decided");
    }
  }

  if (J && f.algebra.dim() > 0) r.feasibility = summarize(feasibility::decide(f.algebra, *J, config));

  auto& tc = r.theorem_consistency;
  tc.applicable = r.flags.unimodular && r.flags.completely_solvable && r.j.integrable;
  const bool feasible = r.feasibility && r.feasibility->verdict == "Feasible";
  tc.consistent = !(tc.applicable && feasible && !r.flags.abelian);
  if (!tc.applicable) {
    if (!r.flags.unimodular)
      tc.detail = "not applicable: not unimodular (trace ad_" + r.flags.unimodular_witness.value_or("?") + " = " +
                  r.flags.unimodular_witness_trace.value_or("?") + ")";
    else if (!r.flags.completely_solvable)
      tc.detail = "not applicable: not completely solvable";
    else
      tc.detail = "not applicable: no integrable J";
  } else if (!tc.consistent) {
    tc.detail = "INCONSISTENT: taming form found on a non-abelian algebra";
  } else if (!r.feasibility) {
    tc.detail = "applicable, no verdict";
  } else if (r.flags.abelian) {
    tc.detail = "consistent: abelian";
  } else {
    tc.detail = "consistent: " + r.feasibility->verdict + " on a non-abelian algebra";
  }

  if (f.omega && J) r.reduction = summarize_reduction(f);
  return r;
}

int exit_code(const AnalysisReport& r) {
  if (!r.theorem_consistency.consistent) return exit_inconsistent;
  if (r.reduction && (r.reduction->proof_trace_violation || !r.reduction->unimodular_preserved ||
                      (r.reduction->tamed && r.reduction->failure)))
    return exit_inconsistent;
  if (r.feasibility && r.feasibility->verdict == "Unknown") return exit_unknown;
  return exit_ok;
}

namespace {

template <typename T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

json to_json(const AnalysisReport& r) {
  json flags = {{"solvable", r.flags.solvable},
                {"nilpotent", r.flags.nilpotent},
                {"completely_solvable", r.flags.completely_solvable},
                {"unimodular", r.flags.unimodular},
                {"abelian", r.flags.abelian}};
  put_optional(flags, "unimodular_witness", r.flags.unimodular_witness);
  put_optional(flags, "unimodular_witness_trace", r.flags.unimodular_witness_trace);
  put_optional(flags, "complete_solvability_witness", r.flags.complete_solvability_witness);

  json doc = {{"name", r.name},
              {"dim", r.dim},
              {"flags", flags},
              {"J", {{"present", r.j.present}, {"J_squared_ok", r.j.j_squared_ok}, {"integrable", r.j.integrable}}},
              {"theorem_consistency",
               {{"applicable", r.theorem_consistency.applicable},
                {"consistent", r.theorem_consistency.consistent},
                {"detail", r.theorem_consistency.detail}}},
              {"warnings", r.warnings}};
  if (r.feasibility) {
    const auto& f = *r.feasibility;
    json fj = {{"verdict", f.verdict}, {"lambda_min", f.lambda_min}, {"exact_pd", f.exact_pd}, {"dual_residual", f.dual_residual}};
    put_optional(fj, "omega", f.omega);
    put_optional(fj, "dual", f.dual);
    put_optional(fj, "rank_one_direction", f.rank_one_direction);
    put_optional(fj, "degeneracy_source", f.degeneracy_source);
    put_optional(fj, "degeneracy_log", f.degeneracy_log);
    doc["feasibility"] = fj;
  } else {
    doc["feasibility"] = nullptr;
  }
  if (r.reduction) {
    const auto& s = *r.reduction;
    json rj = {{"tamed", s.tamed},
               {"dimensions", s.dimensions},
               {"generators", s.generators},
               {"complete", s.complete},
               {"unimodular_preserved", s.unimodular_preserved},
               {"proof_traces", s.proof_traces}};
    put_optional(rj, "failure", s.failure);
    put_optional(rj, "proof_trace_violation", s.proof_trace_violation);
    doc["reduction"] = rj;
  } else {
    doc["reduction"] = nullptr;
  }
  return doc;
}

AnalysisReport report_from_json(const json& doc) {
  try {
    AnalysisReport r;
    r.name = doc.at("name").get<std::string>();
    r.dim = doc.at("dim").get<std::size_t>();
    const json& fl = doc.at("flags");
    r.flags.solvable = fl.at("solvable").get<bool>();
    r.flags.nilpotent = fl.at("nilpotent").get<bool>();
    r.flags.completely_solvable = fl.at("completely_solvable").get<bool>();
    r.flags.unimodular = fl.at("unimodular").get<bool>();
    r.flags.abelian = fl.at("abelian").get<bool>();
    r.flags.unimodular_witness = get_optional<std::string>(fl, "unimodular_witness");
    r.flags.unimodular_witness_trace = get_optional<std::string>(fl, "unimodular_witness_trace");
    r.flags.complete_solvability_witness = get_optional<std::string>(fl, "complete_solvability_witness");
    const json& j = doc.at("J");
    r.j = {j.at("present").get<bool>(), j.at("J_squared_ok").get<bool>(), j.at("integrable").get<bool>()};
    const json& tc = doc.at("theorem_consistency");
    r.theorem_consistency = {tc.at("applicable").get<bool>(), tc.at("consistent").get<bool>(),
                             tc.at("detail").get<std::string>()};
    r.warnings = doc.at("warnings").get<std::vector<std::string>>();
    if (!doc.at("feasibility").is_null()) {
      const json& fj = doc.at("feasibility");
      FeasibilityReport f;
      f.verdict = fj.at("verdict").get<std::string>();
      f.lambda_min = fj.at("lambda_min").get<double>();
      f.exact_pd = fj.at("exact_pd").get<bool>();
      f.dual_residual = fj.at("dual_residual").get<double>();
      f.omega = get_optional<std::vector<std::string>>(fj, "omega");
      f.dual = get_optional<std::vector<std::vector<double>>>(fj, "dual");
      f.rank_one_direction = get_optional<std::vector<std::string>>(fj, "rank_one_direction");
      f.degeneracy_source = get_optional<std::string>(fj, "degeneracy_source");
      f.degeneracy_log = get_optional<std::string>(fj, "degeneracy_log");
      r.feasibility = std::move(f);
    }
    if (!doc.at("reduction").is_null()) {
      const json& rj = doc.at("reduction");
      ReductionSummary s;
      s.tamed = rj.at("tamed").get<bool>();
      s.dimensions = rj.at("dimensions").get<std::vector<std::size_t>>();
      s.generators = rj.at("generators").get<std::vector<std::vector<std::string>>>();
      s.complete = rj.at("complete").get<bool>();
      s.unimodular_preserved = rj.at("unimodular_preserved").get<bool>();
      s.proof_traces = rj.at("proof_traces").get<std::size_t>();
      s.failure = get_optional<std::string>(rj, "failure");
      s.proof_trace_violation = get_optional<std::string>(rj, "proof_trace_violation");
      r.reduction = std::move(s);
    }
    return r;
  } catch (const json::exception& e) {
    throw ParseError("report", e.what());
  }
}

std::string scope_header() {
  return "tamecert: left-invariant structures at the Lie-algebra level (invariant forms via symmetrization; "
         "lattices and compact quotients are not examined)";
}

std::string format_report(const AnalysisReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << r.name << " (dim " << r.dim << ")\n";
  os << "  solvable " << yn(r.flags.solvable) << ", nilpotent " << yn(r.flags.nilpotent) << ", completely solvable "
     << yn(r.flags.completely_solvable) << ", unimodular " << yn(r.flags.unimodular) << ", abelian "
     << yn(r.flags.abelian) << "\n";
  if (!r.j.present)
    os << "  J: absent\n";
  else
    os << "  J: J^2 = -I " << yn(r.j.j_squared_ok) << ", integrable " << yn(r.j.integrable) << "\n";
  if (r.feasibility) {
    const auto& f = *r.feasibility;
    os << "  taming: " << f.verdict;
    if (f.verdict == "Feasible") {
      os << " (margin " << fmt(f.lambda_min) << (f.exact_pd ? ", exact" : ", numeric only") << ")";
    } else if (f.verdict == "Infeasible") {
      if (f.rank_one_direction) {
        os << " (rank-one certificate v = (";
        for (std::size_t i = 0; i < f.rank_one_direction->size(); ++i) os << (i ? ", " : "") << (*f.rank_one_direction)[i];
        os << "), " << f.degeneracy_source.value_or("") << ")";
      } else {
        os << " (dual residual " << fmt(f.dual_residual) << ")";
      }
    } else if (f.degeneracy_log) {
      os << " (" << *f.degeneracy_log << ")";
    }
    os << "\n";
  }
  os << "  theorem: " << r.theorem_consistency.detail << "\n";
  if (r.reduction) {
    const auto& s = *r.reduction;
    os << "  reduction: ";
    if (!s.tamed) {
      os << s.failure.value_or("not tamed") << "\n";
    } else {
      for (std::size_t i = 0; i < s.dimensions.size(); ++i) os << (i ? " -> " : "") << s.dimensions[i];
      os << (s.complete ? " (complete)" : " (stopped)") << ", proof traces " << s.proof_traces;
      if (s.proof_trace_violation) os << ", VIOLATION: " << *s.proof_trace_violation;
      if (s.failure) os << ", " << *s.failure;
      os << "\n";
    }
  }
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
  return os.str();
}

}  // namespace tamecert::pipeline
