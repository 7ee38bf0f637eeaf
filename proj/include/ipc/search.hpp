#pragma once

#include <cstddef>
#include <optional>

#include "ipc/proof.hpp"

namespace ipc {

struct SearchLimits {
  std::size_t max_facts = 200'000;
  std::size_t max_seed_instances = 500'000;
  bool operator==(const SearchLimits&) const = default;
};

// Bounded forward proof search: seeds every axiom-scheme instance over a
// candidate pool (the subformulas of the goal and of the extension axioms,
// plus implications from those subformulas into the goal's consequent
// spine — which covers the q-wraps the completion engine asks about), adds
// the extension axioms, then saturates under modus ponens for `depth`
// rounds. A returned proof is kernel-valid and concludes the goal; absence
// proves nothing (the search under-approximates theoremhood). The result
// is deterministic: facts are derived in a fixed scan order and the first
// derivation of the goal is reconstructed.
// Throws Error when depth < 0, LimitError when the pool or the fact store
// exceeds the limits.
std::optional<Proof> search_proof(const Extension& ext, const Formula& goal, int depth,
                                  const SearchLimits& limits = {});

}  // namespace ipc
