#include "ipc/semantics.hpp"

#include <cstdint>
#include <set>
#include <vector>

#include "ipc/error.hpp"

namespace ipc {

bool eval(const Valuation& v, const Formula& f) {
  if (f.is_var()) {
    auto it = v.find(f.var_name());
    if (it == v.end())
      throw Error("eval: variable '" + f.var_name() + "' has no assigned value");
    return it->second;
  }
  bool a = eval(v, f.antecedent());
  bool c = eval(v, f.consequent());
  return !(a && !c);
}

namespace {

void assign_row(Valuation& v, const std::vector<std::string>& vars, std::uint64_t row) {
  for (std::size_t j = 0; j < vars.size(); ++j) v[vars[j]] = ((row >> j) & 1) != 0;
}

std::vector<std::string> checked_vars(std::set<std::string>&& names, std::size_t limit,
                                      const char* who) {
  if (names.size() > limit)
    throw LimitError(std::string(who) + ": " + std::to_string(names.size()) +
                     " variables exceed the limit of " + std::to_string(limit));
  return {names.begin(), names.end()};
}

}  // namespace

Verdict is_tautology(const Formula& f, std::size_t variable_limit) {
  std::vector<std::string> vars =
      checked_vars(variables_of(f), variable_limit, "is_tautology");
  Valuation v;
  for (const std::string& name : vars) v[name] = false;
  const std::uint64_t rows = std::uint64_t{1} << vars.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    assign_row(v, vars, row);
    if (!eval(v, f)) return Verdict{false, v};
  }
  return Verdict{true, std::nullopt};
}

bool entails(std::span<const Formula> axioms, const Formula& f,
             std::size_t variable_limit) {
  std::set<std::string> names = variables_of(f);
  for (const Formula& ax : axioms) {
    std::set<std::string> more = variables_of(ax);
    names.insert(more.begin(), more.end());
  }
  std::vector<std::string> vars = checked_vars(std::move(names), variable_limit, "entails");
  Valuation v;
  for (const std::string& name : vars) v[name] = false;
  const std::uint64_t rows = std::uint64_t{1} << vars.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    assign_row(v, vars, row);
    bool satisfied = true;
    for (const Formula& ax : axioms)
      if (!eval(v, ax)) {
        satisfied = false;
        break;
      }
    if (satisfied && !eval(v, f)) return false;
  }
  return true;
}

}  // namespace ipc
