#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ipc/formula.hpp"
#include "ipc/scheme.hpp"

namespace ipc {

// An instantiated axiom scheme. The kernel re-applies the substitution to
// the scheme body and compares; it never searches for a substitution.
struct AxiomInstance {
  SchemeId scheme;
  Substitution substitution;
  bool operator==(const AxiomInstance&) const = default;
};

struct Hypothesis {  // 0-based into Proof::hypotheses
  std::size_t index;
  bool operator==(const Hypothesis&) const = default;
};

struct ExtensionAxiom {  // 0-based into Extension::added_axioms
  std::size_t index;
  bool operator==(const ExtensionAxiom&) const = default;
};

struct ModusPonens {  // 0-based indices of strictly earlier steps
  std::size_t major;  // the implication
  std::size_t minor;  // its antecedent
  bool operator==(const ModusPonens&) const = default;
};

using Justification = std::variant<AxiomInstance, Hypothesis, ExtensionAxiom, ModusPonens>;

struct ProofStep {
  Formula formula;
  Justification justification;
  bool operator==(const ProofStep&) const = default;
};

// Linear Hilbert-style proof. The conclusion is the formula of the last
// step; a nonempty hypothesis list makes it a deduction from Γ.
struct Proof {
  std::vector<Formula> hypotheses;
  std::vector<ProofStep> steps;

  const Formula& conclusion() const;  // throws Error on an empty proof
  bool operator==(const Proof&) const = default;
};

// The base system plus finitely many added axiom formulas, in order.
// An empty list is the base system L itself.
struct Extension {
  std::vector<Formula> added_axioms;
  bool is_base() const { return added_axioms.empty(); }
  bool operator==(const Extension&) const = default;
};

Extension without_axiom(const Extension& ext, std::size_t index);

// Verifies every step by reconstruction and returns the conclusion.
// Throws ProofError naming the first offending step otherwise.
Formula check(const Proof& proof, const Extension& ext);

}  // namespace ipc
