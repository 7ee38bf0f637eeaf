#include "ipc/proof.hpp"

#include <string>

#include "ipc/error.hpp"

namespace ipc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void fail(std::size_t step, const std::string& what) {
  throw ProofError("step " + std::to_string(step + 1) + ": " + what, step);
}

}  // namespace

const Formula& Proof::conclusion() const {
  if (steps.empty()) throw Error("proof has no steps");
  return steps.back().formula;
}

Extension without_axiom(const Extension& ext, std::size_t index) {
  if (index >= ext.added_axioms.size())
    throw Error("without_axiom: index " + std::to_string(index) + " out of range");
  Extension out;
  out.added_axioms.reserve(ext.added_axioms.size() - 1);
  for (std::size_t i = 0; i < ext.added_axioms.size(); ++i)
    if (i != index) out.added_axioms.push_back(ext.added_axioms[i]);
  return out;
}

Formula check(const Proof& proof, const Extension& ext) {
  if (proof.steps.empty()) throw ProofError("proof has no steps", 0);
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& step = proof.steps[i];
    std::visit(
        overloaded{
            [&](const AxiomInstance& ax) {
              Formula expected = [&] {
                try {
                  return apply(ax.substitution, scheme_body(ax.scheme));
                } catch (const Error& e) {
                  fail(i, std::string("incomplete axiom substitution: ") + e.what());
                }
              }();
              if (!(expected == step.formula))
                fail(i, "formula is not the stated " +
                            std::string(scheme_name(ax.scheme)) + " instance");
            },
            [&](const Hypothesis& h) {
              if (h.index >= proof.hypotheses.size())
                fail(i, "hypothesis index " + std::to_string(h.index) + " out of range");
              if (!(proof.hypotheses[h.index] == step.formula))
                fail(i, "formula differs from hypothesis " + std::to_string(h.index));
            },
            [&](const ExtensionAxiom& e) {
              if (e.index >= ext.added_axioms.size())
                fail(i, "extension axiom index " + std::to_string(e.index) +
                            " out of range");
              if (!(ext.added_axioms[e.index] == step.formula))
                fail(i, "formula differs from extension axiom " + std::to_string(e.index));
            },
            [&](const ModusPonens& mp) {
              if (mp.major >= i || mp.minor >= i)
                fail(i, "modus ponens cites a step that is not strictly earlier");
              const Formula& major = proof.steps[mp.major].formula;
              if (!major.is_implication())
                fail(i, "major premise (step " + std::to_string(mp.major + 1) +
                            ") is not an implication");
              if (!(major.antecedent() == proof.steps[mp.minor].formula))
                fail(i, "minor premise does not match the antecedent of step " +
                            std::to_string(mp.major + 1));
              if (!(major.consequent() == step.formula))
                fail(i, "formula does not match the consequent of step " +
                            std::to_string(mp.major + 1));
            },
        },
        step.justification);
  }
  return proof.steps.back().formula;
}

}  // namespace ipc
