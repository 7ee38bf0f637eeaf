#include "ipc/lindenbaum.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <string>

#include "ipc/error.hpp"

namespace ipc {

namespace {

// Incremental theoremhood queries against a growing extension.
struct TheoremOracle {
  virtual ~TheoremOracle() = default;
  virtual bool is_theorem(const Formula& f) = 0;
  virtual void add_axiom(const Formula& f) = 0;
};

// Keeps the set of rows (over a fixed variable superset) satisfying every
// axiom added so far; f is a theorem when it holds on all surviving rows.
// Equivalent to entails() per query, but each axiom is evaluated once.
class SemanticOracle final : public TheoremOracle {
 public:
  SemanticOracle(const Extension& ext, const Universe& universe, const Formula& q) {
    std::set<std::string> names(universe.variables.begin(), universe.variables.end());
    names.merge(variables_of(q));
    for (const Formula& ax : ext.added_axioms) names.merge(variables_of(ax));
    if (names.size() > kDefaultVariableLimit)
      throw LimitError("completion oracle: " + std::to_string(names.size()) +
                       " variables exceed the limit of " +
                       std::to_string(kDefaultVariableLimit));

    Valuation row;
    for (const std::string& name : names) row[name] = false;
    const std::size_t count = std::size_t{1} << names.size();
    for (std::size_t bits = 0; bits < count; ++bits) {
      std::size_t j = 0;
      for (auto& [name, value] : row) value = (bits >> j++) & 1;
      bool satisfies = true;
      for (const Formula& ax : ext.added_axioms)
        if (!eval(row, ax)) {
          satisfies = false;
          break;
        }
      if (satisfies) rows_.push_back(row);
    }
  }

  bool is_theorem(const Formula& f) override {
    return std::all_of(rows_.begin(), rows_.end(),
                       [&](const Valuation& row) { return eval(row, f); });
  }

  void add_axiom(const Formula& f) override {
    std::erase_if(rows_, [&](const Valuation& row) { return !eval(row, f); });
  }

 private:
  std::vector<Valuation> rows_;
};

class SearchOracle final : public TheoremOracle {
 public:
  SearchOracle(Extension ext, const OracleMode& mode) : ext_(std::move(ext)), mode_(mode) {}

  bool is_theorem(const Formula& f) override { return theoremhood_in(ext_, f, mode_); }
  void add_axiom(const Formula& f) override { ext_.added_axioms.push_back(f); }

 private:
  Extension ext_;
  OracleMode mode_;
};

std::unique_ptr<TheoremOracle> make_oracle(const Extension& ext, const Universe& universe,
                                           const Formula& q, const OracleMode& mode) {
  if (mode.kind == OracleMode::Kind::Semantic)
    return std::make_unique<SemanticOracle>(ext, universe, q);
  return std::make_unique<SearchOracle>(ext, mode);
}

}  // namespace

bool q_consistent(const Extension& ext, const Formula& q, const OracleMode& oracle) {
  return !theoremhood_in(ext, q, oracle);
}

CompletionTrace complete(const Extension& ext, const Formula& q, const Universe& universe,
                         const OracleMode& oracle) {
  if (!q_consistent(ext, q, oracle))
    throw Error("completion: '" + print(q) +
                "' is already a theorem of the starting extension");

  auto theorems = make_oracle(ext, universe, q, oracle);
  CompletionTrace trace{q, universe, ext, ext, {}};
  trace.steps.reserve(universe.formulas.size());
  for (std::size_t n = 0; n < universe.formulas.size(); ++n) {
    const Formula& a = universe.formulas[n];
    Formula qa = q_wrap(q, a);
    bool qq = theorems->is_theorem(q_wrap(q, qa));
    if (!qq) {
      trace.final_extension.added_axioms.push_back(qa);
      theorems->add_axiom(qa);
      if (theorems->is_theorem(q))
        throw Error("completion: q-consistency lost after adding '" + print(qa) + "'");
    }
    trace.steps.push_back({n, a, qq, !qq});
  }
  return trace;
}

FormulaValuation::FormulaValuation(std::vector<std::pair<Formula, bool>> values)
    : values_(std::move(values)) {
  for (const auto& [f, value] : values_)
    if (!by_formula_.emplace(f, value).second)
      throw Error("valuation: duplicate entry for '" + print(f) + "'");
}

std::optional<bool> FormulaValuation::value_of(const Formula& f) const {
  auto it = by_formula_.find(f);
  if (it == by_formula_.end()) return std::nullopt;
  return it->second;
}

Valuation FormulaValuation::variable_assignment() const {
  Valuation out;
  for (const auto& [f, value] : values_)
    if (!f.is_implication()) out[f.var_name()] = value;
  return out;
}

FormulaValuation extract_valuation(const CompletionTrace& trace, const OracleMode& oracle) {
  if (!q_consistent(trace.final_extension, trace.q, oracle))
    throw Error("valuation extraction requires a q-consistent extension, but '" +
                print(trace.q) + "' is a theorem");

  auto theorems = make_oracle(trace.final_extension, trace.universe, trace.q, oracle);
  std::vector<std::pair<Formula, bool>> values;
  values.reserve(trace.universe.formulas.size());
  for (const Formula& a : trace.universe.formulas) {
    Formula qa = q_wrap(trace.q, a);
    bool qq = theorems->is_theorem(q_wrap(trace.q, qa));
    bool q_of_a = theorems->is_theorem(qa);
    if (qq && q_of_a)
      throw ExtractionError("both (A -> q) -> q and A -> q are theorems at A = '" +
                                print(a) + "'",
                            ExtractionError::Kind::Contradiction, print(a));
    if (!qq && !q_of_a)
      throw ExtractionError("neither (A -> q) -> q nor A -> q is a theorem at A = '" +
                                print(a) + "' (bound too small)",
                            ExtractionError::Kind::Undefined, print(a));
    values.emplace_back(a, qq);
  }
  return FormulaValuation(std::move(values));
}

ClaimReport verify_valuation_claim(const FormulaValuation& v) {
  ClaimReport report;
  for (const auto& [f, value] : v.values()) {
    if (!f.is_implication()) continue;
    std::optional<bool> va = v.value_of(f.antecedent());
    std::optional<bool> vc = v.value_of(f.consequent());
    if (!va || !vc) continue;
    ++report.implications_checked;
    if (value != !(*va && !*vc)) report.violations.push_back({f, value, *va, *vc});
  }
  return report;
}

CountermodelRun countermodel_run(const Formula& q, std::size_t size_bound,
                                 const CountermodelOptions& options) {
  if (is_tautology(q).tautology)
    throw TautologyError("'" + print(q) + "' is a tautology; no countermodel exists");

  std::set<std::string> name_set = variables_of(q);
  std::vector<std::string> names(name_set.begin(), name_set.end());
  std::size_t bound = std::max<std::size_t>(size_bound, 1);
  for (int attempt = 0;; ++attempt) {
    Universe universe = enumerate(names, bound);
    CompletionTrace trace = complete(Extension{}, q, universe, options.oracle);
    try {
      if (!universe.contains(q))
        throw ExtractionError("the universe bound " + std::to_string(bound) +
                                  " does not reach '" + print(q) + "'",
                              ExtractionError::Kind::Undefined, print(q));
      FormulaValuation valuation = extract_valuation(trace, options.oracle);
      if (valuation.value_of(q) != std::optional<bool>(false))
        throw Error("countermodel: the extracted valuation fails to refute '" +
                    print(q) + "'");
      Valuation assignment = valuation.variable_assignment();
      if (eval(assignment, q))
        throw Error("countermodel: the projected assignment fails to falsify '" +
                    print(q) + "'");
      return {std::move(trace), std::move(valuation), std::move(assignment), bound};
    } catch (const ExtractionError& e) {
      if (e.kind != ExtractionError::Kind::Undefined || attempt >= options.retry_steps)
        throw;
      ++bound;  // enlarge the universe one size step and rerun
    }
  }
}

Valuation countermodel(const Formula& q, std::size_t size_bound, const OracleMode& oracle) {
  CountermodelOptions options;
  options.oracle = oracle;
  return countermodel_run(q, size_bound, options).assignment;
}

}  // namespace ipc
