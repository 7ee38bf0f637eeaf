#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <string_view>

namespace ipc {

// A well-formed formula of the implication-only language: a propositional
// variable or an implication between two formulas. Immutable value type;
// copies share structure and are cheap. Structural equality is the only
// notion of identity.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula implies(Formula antecedent, Formula consequent);

  bool is_var() const { return node_->lhs == nullptr; }
  bool is_implication() const { return node_->lhs != nullptr; }

  const std::string& var_name() const;  // requires is_var()
  Formula antecedent() const;           // requires is_implication()
  Formula consequent() const;

  // Number of variable leaves; the size measure used by enumerate().
  std::size_t leaf_count() const { return node_->leaves; }
  std::size_t hash() const { return node_->hash; }

  // Structural order for ordered containers. Not the (size, text) order
  // used by enumerate(); see canonical_less().
  int compare_structure(const Formula& other) const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    std::string name;  // leaf name; empty for implications
    std::shared_ptr<const Node> lhs, rhs;
    std::size_t leaves = 0;
    std::size_t hash = 0;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static bool nodes_equal(const Node* a, const Node* b);
  static int nodes_compare(const Node* a, const Node* b);
  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

struct FormulaLess {
  bool operator()(const Formula& a, const Formula& b) const {
    return a.compare_structure(b) < 0;
  }
};

// The enumeration order: leaf count first, then canonical text.
bool canonical_less(const Formula& a, const Formula& b);

// Canonical fully parenthesized ASCII text, e.g. "((p -> q) -> p)".
std::string print(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);

// Surface grammar:
//   formula     := implication
//   implication := atom ('->' implication)?
//   atom        := identifier | '(' formula ')'
// Unparenthesized chains associate to the right; whitespace is
// insignificant; the UTF-8 arrow U+2283 is accepted as a synonym for '->'.
// Identifiers match [a-z][a-zA-Z0-9_]*. Throws ParseError on bad input.
Formula parse(std::string_view text);

// QA := A -> Q for a fixed designated formula Q.
Formula q_wrap(const Formula& q, const Formula& a);

// Names of the variable leaves, sorted.
std::set<std::string> variables_of(const Formula& f);

// Grammar-level variable names: [a-z][a-zA-Z0-9_]*.
bool is_valid_variable_name(std::string_view name);

}  // namespace ipc
