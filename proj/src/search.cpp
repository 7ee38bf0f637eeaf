#include "ipc/search.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ipc/error.hpp"
#include "ipc/scheme.hpp"

namespace ipc {

namespace {

// How a fact entered the store.
struct FromScheme {
  SchemeId scheme;
  Substitution substitution;
};
struct FromExtension {
  std::size_t index;
};
struct FromMP {
  std::size_t major, minor;  // fact ids
};
using Origin = std::variant<FromScheme, FromExtension, FromMP>;

struct Fact {
  Formula formula;
  int level;
  Origin origin;
};

void collect_subformulas(const Formula& f, std::vector<Formula>& out,
                         std::unordered_map<Formula, bool, FormulaHash>& seen) {
  if (seen.emplace(f, true).second) {
    out.push_back(f);
    if (f.is_implication()) {
      collect_subformulas(f.antecedent(), out, seen);
      collect_subformulas(f.consequent(), out, seen);
    }
  }
}

struct Saturator {
  const Extension& ext;
  const Formula& goal;
  const SearchLimits& limits;

  std::vector<Fact> facts;
  std::unordered_map<Formula, std::size_t, FormulaHash> index;
  // implication facts keyed by their antecedent, in insertion order
  std::unordered_map<Formula, std::vector<std::size_t>, FormulaHash> by_antecedent;
  std::optional<std::size_t> goal_fact;

  bool add(Formula f, int level, Origin origin) {
    if (index.count(f)) return false;  // first derivation wins
    if (facts.size() >= limits.max_facts)
      throw LimitError("proof search: fact limit of " +
                       std::to_string(limits.max_facts) + " exceeded");
    std::size_t id = facts.size();
    index.emplace(f, id);
    if (f.is_implication()) by_antecedent[f.antecedent()].push_back(id);
    if (!goal_fact && f == goal) goal_fact = id;
    facts.push_back({std::move(f), level, std::move(origin)});
    return true;
  }

  // Candidate instantiation pool, ordered by (size, text) for determinism.
  std::vector<Formula> build_pool() const {
    std::vector<Formula> subs;
    std::unordered_map<Formula, bool, FormulaHash> seen;
    collect_subformulas(goal, subs, seen);
    for (const Formula& ax : ext.added_axioms) collect_subformulas(ax, subs, seen);

    std::vector<Formula> spine;
    for (Formula f = goal;; f = f.consequent()) {
      spine.push_back(f);
      if (!f.is_implication()) break;
    }

    std::vector<Formula> pool = subs;
    for (const Formula& s : subs)
      for (const Formula& t : spine) {
        Formula wrapped = Formula::implies(s, t);
        if (seen.emplace(wrapped, true).second) pool.push_back(wrapped);
      }
    std::sort(pool.begin(), pool.end(), canonical_less);
    return pool;
  }

  void seed() {
    std::vector<Formula> pool = build_pool();
    const std::size_t n = pool.size();
    std::size_t instances = n * n * (n + 2) + ext.added_axioms.size();
    if (instances > limits.max_seed_instances)
      throw LimitError("proof search: " + std::to_string(instances) +
                       " seed instances exceed the limit of " +
                       std::to_string(limits.max_seed_instances));

    for (const Formula& a : pool)
      for (const Formula& b : pool) {
        add(apply(sub_ab(a, b), scheme_body(SchemeId::AX1)), 0,
            FromScheme{SchemeId::AX1, sub_ab(a, b)});
        for (const Formula& c : pool)
          add(apply(sub_abc(a, b, c), scheme_body(SchemeId::AX2)), 0,
              FromScheme{SchemeId::AX2, sub_abc(a, b, c)});
        add(apply(sub_ab(a, b), scheme_body(SchemeId::AX3)), 0,
            FromScheme{SchemeId::AX3, sub_ab(a, b)});
      }
    for (std::size_t k = 0; k < ext.added_axioms.size(); ++k)
      add(ext.added_axioms[k], 0, FromExtension{k});
  }

  // One modus ponens round: combines facts of level <= round-1 where at
  // least one operand sits on the frontier (level exactly round-1).
  void round(int r, std::size_t frontier_begin, std::size_t frontier_end) {
    for (std::size_t m = frontier_begin; m < frontier_end && !goal_fact; ++m) {
      if (facts[m].formula.is_implication()) {
        auto it = index.find(facts[m].formula.antecedent());
        if (it != index.end() && facts[it->second].level <= r - 1)
          add(facts[m].formula.consequent(), r, FromMP{m, it->second});
      }
      if (goal_fact) break;
      auto watchers = by_antecedent.find(facts[m].formula);
      if (watchers == by_antecedent.end()) continue;
      // index-based: add() may grow this very vector with level-r facts
      const std::vector<std::size_t>& watching = watchers->second;
      for (std::size_t wi = 0, wn = watching.size(); wi < wn; ++wi) {
        std::size_t w = watching[wi];
        if (facts[w].level > r - 1) break;  // watcher list is level-ordered
        add(facts[w].formula.consequent(), r, FromMP{w, m});
        if (goal_fact) break;
      }
    }
  }

  Proof reconstruct() const {
    struct Emitter {
      const Saturator& sat;
      Proof proof;
      std::unordered_map<std::size_t, std::size_t> emitted;

      std::size_t emit(std::size_t fact_id) {
        auto it = emitted.find(fact_id);
        if (it != emitted.end()) return it->second;
        const Fact& fact = sat.facts[fact_id];
        std::size_t step = std::visit(
            [&](const auto& origin) -> std::size_t {
              using T = std::decay_t<decltype(origin)>;
              if constexpr (std::is_same_v<T, FromScheme>) {
                proof.steps.push_back(
                    {fact.formula, AxiomInstance{origin.scheme, origin.substitution}});
              } else if constexpr (std::is_same_v<T, FromExtension>) {
                proof.steps.push_back({fact.formula, ExtensionAxiom{origin.index}});
              } else {
                std::size_t major = emit(origin.major);
                std::size_t minor = emit(origin.minor);
                proof.steps.push_back({fact.formula, ModusPonens{major, minor}});
              }
              return proof.steps.size() - 1;
            },
            fact.origin);
        emitted.emplace(fact_id, step);
        return step;
      }
    };

    Emitter em{*this, {}, {}};
    em.emit(*goal_fact);
    return std::move(em.proof);
  }
};

}  // namespace

std::optional<Proof> search_proof(const Extension& ext, const Formula& goal, int depth,
                                  const SearchLimits& limits) {
  if (depth < 0) throw Error("proof search: depth must be nonnegative");

  Saturator sat{ext, goal, limits, {}, {}, {}, {}};
  sat.seed();
  std::size_t frontier_begin = 0;
  for (int r = 1; r <= depth && !sat.goal_fact; ++r) {
    std::size_t frontier_end = sat.facts.size();
    sat.round(r, frontier_begin, frontier_end);
    if (sat.facts.size() == frontier_end) break;  // fixpoint below the depth bound
    frontier_begin = frontier_end;
  }
  if (!sat.goal_fact) return std::nullopt;

  Proof proof = sat.reconstruct();
  if (check(proof, ext) != goal) throw Error("proof search: reconstruction mismatch");
  return proof;
}

}  // namespace ipc
