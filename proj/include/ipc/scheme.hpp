#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "ipc/formula.hpp"

namespace ipc {

// The axiom schemes of the base system L:
//   AX1: A -> (B -> A)
//   AX2: (A -> (B -> C)) -> ((A -> B) -> (A -> C))
//   AX3: ((A -> B) -> A) -> A         (Peirce)
enum class SchemeId { AX1, AX2, AX3 };

inline constexpr std::array<SchemeId, 3> kAllSchemes = {SchemeId::AX1, SchemeId::AX2,
                                                        SchemeId::AX3};

std::string_view scheme_name(SchemeId id);
std::optional<SchemeId> scheme_from_name(std::string_view name);

// Scheme template with metavariable leaves "A", "B", "C". Metavariable
// names are uppercase and therefore disjoint from parsable variables; no
// schematic formula ever appears in user-facing files.
const Formula& scheme_body(SchemeId id);

// The metavariables the scheme mentions, in fixed A,B,C order.
std::span<const char> scheme_metavariables(SchemeId id);

bool is_metavariable(const Formula& f);

// Partial map from the metavariables {A,B,C} to formulas.
class Substitution {
 public:
  static constexpr std::array<char, 3> kMetavariables = {'A', 'B', 'C'};

  bool has(char metavariable) const;
  const Formula& at(char metavariable) const;  // throws Error when unbound
  // Binds a metavariable; rebinding it to a different formula throws.
  void bind(char metavariable, Formula f);

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.slots_ == b.slots_;
  }

 private:
  static std::size_t slot(char metavariable);
  std::array<std::optional<Formula>, 3> slots_;
};

// Simultaneous replacement of the metavariable leaves of a scheme body.
// Throws Error when the body mentions a metavariable left unbound.
Formula apply(const Substitution& substitution, const Formula& scheme_body);

// The unique substitution with apply(sub, scheme_body(id)) == f, if any.
std::optional<Substitution> match_scheme(SchemeId id, const Formula& f);

// Substitution builders for the common arities.
Substitution sub_ab(Formula a, Formula b);
Substitution sub_abc(Formula a, Formula b, Formula c);

}  // namespace ipc
