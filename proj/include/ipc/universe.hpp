#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipc/formula.hpp"

namespace ipc {

// Deterministic listing of every formula over a variable set up to a leaf
// count bound, ordered by (leaf count, canonical text). This realizes the
// enumeration A_0, A_1, ... that the completion procedure walks.
struct Universe {
  std::vector<std::string> variables;  // sorted, distinct
  std::size_t size_bound = 0;
  std::vector<Formula> formulas;

  bool contains(const Formula& f) const { return index_of(f).has_value(); }
  std::optional<std::size_t> index_of(const Formula& f) const;

  bool operator==(const Universe&) const = default;
};

inline constexpr std::size_t kDefaultUniverseLimit = 2'000'000;

// Number of formulas enumerate() would produce; saturates at SIZE_MAX.
std::size_t count_universe(std::span<const std::string> variables, std::size_t size_bound);

// Throws Error on an empty or ill-formed variable list or size_bound < 1;
// throws LimitError when the universe would exceed max_formulas.
Universe enumerate(std::vector<std::string> variables, std::size_t size_bound,
                   std::size_t max_formulas = kDefaultUniverseLimit);

}  // namespace ipc
