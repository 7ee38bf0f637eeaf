#include "ipc/scheme.hpp"

#include <string>

#include "ipc/error.hpp"

namespace ipc {

namespace {

Formula mv(char c) { return Formula::var(std::string(1, c)); }

const std::array<char, 2> kMetavarsAB = {'A', 'B'};
const std::array<char, 3> kMetavarsABC = {'A', 'B', 'C'};

}  // namespace

std::string_view scheme_name(SchemeId id) {
  switch (id) {
    case SchemeId::AX1:
      return "AX1";
    case SchemeId::AX2:
      return "AX2";
    case SchemeId::AX3:
      return "AX3";
  }
  throw Error("unknown scheme id");
}

std::optional<SchemeId> scheme_from_name(std::string_view name) {
  if (name == "AX1") return SchemeId::AX1;
  if (name == "AX2") return SchemeId::AX2;
  if (name == "AX3") return SchemeId::AX3;
  return std::nullopt;
}

const Formula& scheme_body(SchemeId id) {
  static const Formula ax1 = Formula::implies(mv('A'), Formula::implies(mv('B'), mv('A')));
  static const Formula ax2 = Formula::implies(
      Formula::implies(mv('A'), Formula::implies(mv('B'), mv('C'))),
      Formula::implies(Formula::implies(mv('A'), mv('B')),
                       Formula::implies(mv('A'), mv('C'))));
  static const Formula ax3 = Formula::implies(
      Formula::implies(Formula::implies(mv('A'), mv('B')), mv('A')), mv('A'));
  switch (id) {
    case SchemeId::AX1:
      return ax1;
    case SchemeId::AX2:
      return ax2;
    case SchemeId::AX3:
      return ax3;
  }
  throw Error("unknown scheme id");
}

std::span<const char> scheme_metavariables(SchemeId id) {
  switch (id) {
    case SchemeId::AX1:
    case SchemeId::AX3:
      return kMetavarsAB;
    case SchemeId::AX2:
      return kMetavarsABC;
  }
  throw Error("unknown scheme id");
}

bool is_metavariable(const Formula& f) {
  if (!f.is_var()) return false;
  const std::string& n = f.var_name();
  return n.size() == 1 && (n[0] == 'A' || n[0] == 'B' || n[0] == 'C');
}

std::size_t Substitution::slot(char metavariable) {
  switch (metavariable) {
    case 'A':
      return 0;
    case 'B':
      return 1;
    case 'C':
      return 2;
  }
  throw Error(std::string("unknown metavariable '") + metavariable + "'");
}

bool Substitution::has(char metavariable) const {
  return slots_[slot(metavariable)].has_value();
}

const Formula& Substitution::at(char metavariable) const {
  const auto& s = slots_[slot(metavariable)];
  if (!s) throw Error(std::string("unbound metavariable ") + metavariable);
  return *s;
}

void Substitution::bind(char metavariable, Formula f) {
  auto& s = slots_[slot(metavariable)];
  if (s && !(*s == f))
    throw Error(std::string("metavariable ") + metavariable + " is already bound");
  s = std::move(f);
}

Formula apply(const Substitution& substitution, const Formula& scheme_body) {
  if (scheme_body.is_var()) {
    if (is_metavariable(scheme_body)) return substitution.at(scheme_body.var_name()[0]);
    return scheme_body;
  }
  return Formula::implies(apply(substitution, scheme_body.antecedent()),
                          apply(substitution, scheme_body.consequent()));
}

namespace {

bool match_into(const Formula& body, const Formula& f, Substitution& sub) {
  if (body.is_var()) {
    if (is_metavariable(body)) {
      char m = body.var_name()[0];
      if (sub.has(m)) return sub.at(m) == f;
      sub.bind(m, f);
      return true;
    }
    return f.is_var() && f.var_name() == body.var_name();
  }
  if (!f.is_implication()) return false;
  return match_into(body.antecedent(), f.antecedent(), sub) &&
         match_into(body.consequent(), f.consequent(), sub);
}

}  // namespace

std::optional<Substitution> match_scheme(SchemeId id, const Formula& f) {
  Substitution sub;
  if (!match_into(scheme_body(id), f, sub)) return std::nullopt;
  return sub;
}

Substitution sub_ab(Formula a, Formula b) {
  Substitution s;
  s.bind('A', std::move(a));
  s.bind('B', std::move(b));
  return s;
}

Substitution sub_abc(Formula a, Formula b, Formula c) {
  Substitution s = sub_ab(std::move(a), std::move(b));
  s.bind('C', std::move(c));
  return s;
}

}  // namespace ipc
