#include "ipc/universe.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "ipc/error.hpp"

namespace ipc {

std::optional<std::size_t> Universe::index_of(const Formula& f) const {
  for (std::size_t i = 0; i < formulas.size(); ++i)
    if (formulas[i] == f) return i;
  return std::nullopt;
}

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

}  // namespace

std::size_t count_universe(std::span<const std::string> variables, std::size_t size_bound) {
  std::set<std::string> distinct(variables.begin(), variables.end());
  std::size_t v = distinct.size();
  // trees[n]: binary trees with n leaves (Catalan numbers, shifted)
  std::vector<std::size_t> trees(size_bound + 1, 0);
  if (size_bound >= 1) trees[1] = 1;
  for (std::size_t n = 2; n <= size_bound; ++n)
    for (std::size_t i = 1; i < n; ++i)
      trees[n] = sat_add(trees[n], sat_mul(trees[i], trees[n - i]));
  std::size_t total = 0;
  std::size_t labelings = 1;  // v^n
  for (std::size_t n = 1; n <= size_bound; ++n) {
    labelings = sat_mul(labelings, v);
    total = sat_add(total, sat_mul(trees[n], labelings));
  }
  return total;
}

Universe enumerate(std::vector<std::string> variables, std::size_t size_bound,
                   std::size_t max_formulas) {
  if (variables.empty()) throw Error("enumerate: variable list is empty");
  if (size_bound < 1) throw Error("enumerate: size bound must be at least 1");
  std::set<std::string> distinct;
  for (const std::string& name : variables) {
    if (!is_valid_variable_name(name))
      throw Error("enumerate: invalid variable name: '" + name + "'");
    distinct.insert(name);
  }
  std::vector<std::string> vars(distinct.begin(), distinct.end());

  std::size_t total = count_universe(vars, size_bound);
  if (total > max_formulas)
    throw LimitError("enumerate: universe over " + std::to_string(vars.size()) +
                     " variables with bound " + std::to_string(size_bound) +
                     " would hold " +
                     (total == std::numeric_limits<std::size_t>::max()
                          ? std::string("more than ") + std::to_string(max_formulas)
                          : std::to_string(total)) +
                     " formulas; the limit is " + std::to_string(max_formulas));

  // Build formulas grouped by leaf count, each group sorted by text.
  std::vector<std::vector<Formula>> by_size(size_bound + 1);
  for (const std::string& name : vars) by_size[1].push_back(Formula::var(name));
  for (std::size_t n = 2; n <= size_bound; ++n) {
    std::vector<std::pair<std::string, Formula>> batch;
    for (std::size_t i = 1; i < n; ++i)
      for (const Formula& lhs : by_size[i])
        for (const Formula& rhs : by_size[n - i]) {
          Formula f = Formula::implies(lhs, rhs);
          std::string text = print(f);
          batch.emplace_back(std::move(text), std::move(f));
        }
    std::sort(batch.begin(), batch.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    by_size[n].reserve(batch.size());
    for (auto& [text, f] : batch) by_size[n].push_back(std::move(f));
  }

  Universe u;
  u.variables = std::move(vars);
  u.size_bound = size_bound;
  u.formulas.reserve(total);
  for (std::size_t n = 1; n <= size_bound; ++n)
    for (Formula& f : by_size[n]) u.formulas.push_back(std::move(f));
  return u;
}

}  // namespace ipc
