#pragma once

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ipc/oracle.hpp"
#include "ipc/semantics.hpp"
#include "ipc/universe.hpp"

namespace ipc {

// True when q is not a theorem of ext under the given oracle.
bool q_consistent(const Extension& ext, const Formula& q, const OracleMode& oracle);

struct CompletionStep {
  std::size_t index;
  Formula formula;      // A_n, the universe formula examined
  bool qq_is_theorem;   // oracle verdict on (A_n -> q) -> q against N_n
  bool added;           // whether A_n -> q became an axiom (= !qq_is_theorem)
  bool operator==(const CompletionStep&) const = default;
};

struct CompletionTrace {
  Formula q;
  Universe universe;
  Extension initial_extension;
  Extension final_extension;
  std::vector<CompletionStep> steps;
  bool operator==(const CompletionTrace&) const = default;
};

// Completion by enumeration: starting from N_0 = ext, examines each
// universe formula A_n in order and, when (A_n -> q) -> q is not yet a
// theorem of N_n, adds A_n -> q as an axiom to form N_{n+1}. The result is
// q-consistent and bounded-q-complete: every universe formula A has
// (A -> q) -> q or A -> q as a theorem of the final extension. Additions
// are recorded even when the added axiom was already derivable.
// Throws Error when ext is not q-consistent to begin with, and (defensively)
// if q ever becomes a theorem after an addition.
CompletionTrace complete(const Extension& ext, const Formula& q, const Universe& universe,
                         const OracleMode& oracle);

// Partial two-valued map over the formulas of a universe, plus the variable
// assignment it induces on the variables among them.
class FormulaValuation {
 public:
  // Throws Error when the same formula appears twice.
  explicit FormulaValuation(std::vector<std::pair<Formula, bool>> values);

  const std::vector<std::pair<Formula, bool>>& values() const { return values_; }
  std::optional<bool> value_of(const Formula& f) const;
  Valuation variable_assignment() const;

 private:
  std::vector<std::pair<Formula, bool>> values_;
  std::unordered_map<Formula, bool, FormulaHash> by_formula_;
};

// Reads the valuation off a completed trace: v(A) = 1 when (A -> q) -> q is
// a theorem of the final extension, v(A) = 0 when A -> q is. Throws
// ExtractionError (Contradiction) when both hold for some A — the final
// extension is q-inconsistent — and ExtractionError (Undefined) when
// neither does, i.e. the bound was too small to settle A. Also throws Error
// when the final extension is not q-consistent to begin with.
FormulaValuation extract_valuation(const CompletionTrace& trace, const OracleMode& oracle);

struct ClaimViolation {
  Formula implication;
  bool value_implication, value_antecedent, value_consequent;
};

struct ClaimReport {
  std::size_t implications_checked = 0;
  std::vector<ClaimViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks that v respects the evaluation rule on every implication in its
// domain whose antecedent and consequent are also in its domain:
// v(A -> B) = 0 exactly when v(A) = 1 and v(B) = 0.
ClaimReport verify_valuation_claim(const FormulaValuation& v);

struct CountermodelOptions {
  int retry_steps = 4;  // how many one-step universe enlargements to attempt
  OracleMode oracle = OracleMode::semantic();
};

struct CountermodelRun {
  CompletionTrace trace;
  FormulaValuation valuation;
  Valuation assignment;
  std::size_t bound_used;
};

// The full pipeline: refuse tautologies, build the universe over
// variables_of(q) at the given size bound, complete from the base system,
// extract the valuation, verify v(q) = 0, and project the variable
// assignment (which then falsifies q under eval). When extraction is
// undefined at some formula — or q itself exceeds the bound — the universe
// is enlarged one size step and the run retried, up to options.retry_steps.
CountermodelRun countermodel_run(const Formula& q, std::size_t size_bound,
                                 const CountermodelOptions& options = {});

// Just the falsifying assignment.
Valuation countermodel(const Formula& q, std::size_t size_bound,
                       const OracleMode& oracle = OracleMode::semantic());

}  // namespace ipc
