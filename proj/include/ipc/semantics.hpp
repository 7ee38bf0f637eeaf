#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "ipc/formula.hpp"

namespace ipc {

// Total assignment of truth bits to the variables it mentions.
using Valuation = std::map<std::string, bool>;

// Outcome of a tautology decision. The countermodel is present exactly when
// the formula is falsifiable, and then falsifies it.
struct Verdict {
  bool tautology = false;
  std::optional<Valuation> countermodel;
};

inline constexpr std::size_t kDefaultVariableLimit = 20;

// v(A -> B) = 0 precisely when v(A) = 1 and v(B) = 0.
// Throws Error when f mentions a variable v does not define.
bool eval(const Valuation& v, const Formula& f);

// Exhausts all 2^k rows over variables_of(f). Variables are sorted by name;
// rows run in binary-counter order with the first variable toggling
// fastest; the reported countermodel is the first falsifying row.
// Throws LimitError when the variable count exceeds variable_limit.
Verdict is_tautology(const Formula& f, std::size_t variable_limit = kDefaultVariableLimit);

// True when every row over the combined variables that satisfies all axioms
// also satisfies f. entails({}, f) agrees with is_tautology(f).
bool entails(std::span<const Formula> axioms, const Formula& f,
             std::size_t variable_limit = kDefaultVariableLimit);

}  // namespace ipc
