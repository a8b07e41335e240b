#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "tamecert/feasibility.hpp"
#include "tamecert/fixture.hpp"

namespace tamecert::pipeline {

struct AlgebraFlags {
  bool solvable = false;
  bool nilpotent = false;
  bool completely_solvable = false;
  bool unimodular = false;
  bool abelian = false;
  /// Label of the first basis vector with trace(ad) != 0, and that trace.
  std::optional<std::string> unimodular_witness;
  std::optional<std::string> unimodular_witness_trace;
  /// Label of a basis vector whose adjoint has a non-real eigenvalue.
  std::optional<std::string> complete_solvability_witness;
  friend bool operator==(const AlgebraFlags&, const AlgebraFlags&) = default;
};

struct JStatus {
  bool present = false;
  bool j_squared_ok = false;
  bool integrable = false;
  friend bool operator==(const JStatus&, const JStatus&) = default;
};

/// Serializable form of a feasibility verdict.
struct FeasibilityReport {
  std::string verdict;  // Feasible | Infeasible | Unknown
  /// Feasible: optimizer margin. Infeasible, Unknown: best primal value.
  double lambda_min = 0;
  bool exact_pd = false;
  /// Coefficients of Omega over index pairs i < j.
  std::optional<std::vector<std::string>> omega;
  std::optional<std::vector<std::vector<double>>> dual;
  double dual_residual = 0;
  std::optional<std::vector<std::string>> rank_one_direction;
  std::optional<std::string> degeneracy_source;
  /// Unknown verdicts record why neither certificate was produced.
  std::optional<std::string> degeneracy_log;
  friend bool operator==(const FeasibilityReport&, const FeasibilityReport&) = default;
};

struct TheoremConsistency {
  /// unimodular, completely solvable and J integrable.
  bool applicable = false;
  /// Not (applicable and Feasible and non-abelian).
  bool consistent = true;
  std::string detail;
  friend bool operator==(const TheoremConsistency&, const TheoremConsistency&) = default;
};

struct ReductionSummary {
  bool tamed = false;
  /// First failing property when the input triple is not tamed, or the reduction error.
  std::optional<std::string> failure;
  std::vector<std::size_t> dimensions;
  std::vector<std::vector<std::string>> generators;
  bool complete = false;
  bool unimodular_preserved = true;
  /// Triples whose proof trace was checked, and the first violation if any.
  std::size_t proof_traces = 0;
  std::optional<std::string> proof_trace_violation;
  friend bool operator==(const ReductionSummary&, const ReductionSummary&) = default;
};

struct AnalysisReport {
  std::string name;
  std::size_t dim = 0;
  AlgebraFlags flags;
  JStatus j;
  std::optional<FeasibilityReport> feasibility;
  TheoremConsistency theorem_consistency;
  std::optional<ReductionSummary> reduction;
  std::vector<std::string> warnings;
  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

enum ExitCode : int { exit_ok = 0, exit_input_error = 1, exit_inconsistent = 2, exit_unknown = 3 };

FeasibilityReport summarize(const feasibility::Verdict& v);

/// Structural flags, J status, feasibility (when J is a complex structure), the theorem
/// check, and the reduction tower with proof traces when omega is given.
AnalysisReport analyze(const Fixture& f, const feasibility::Config& config = {});

/// 2 on an inconsistency or proof-trace violation, 3 on an Unknown verdict, else 0.
int exit_code(const AnalysisReport& r);

nlohmann::json to_json(const AnalysisReport& r);
/// Throws ParseError.
AnalysisReport report_from_json(const nlohmann::json& doc);

std::string scope_header();
std::string format_report(const AnalysisReport& r);

}  // namespace tamecert::pipeline
