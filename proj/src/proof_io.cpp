#include "ipc/proof_io.hpp"

#include <cctype>
#include <string>
#include <variant>
#include <vector>

#include "ipc/error.hpp"

namespace ipc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string join_formulas(const std::vector<Formula>& formulas) {
  std::string out;
  for (std::size_t i = 0; i < formulas.size(); ++i) {
    if (i) out += " ; ";
    out += print(formulas[i]);
  }
  return out;
}

std::string justification_text(const Justification& just) {
  return std::visit(
      overloaded{
          [](const AxiomInstance& ax) {
            std::string out(scheme_name(ax.scheme));
            out += '{';
            bool first = true;
            for (char m : scheme_metavariables(ax.scheme)) {
              if (!first) out += ',';
              first = false;
              out += m;
              out += ":=";
              out += print(ax.substitution.at(m));
            }
            out += '}';
            return out;
          },
          [](const Hypothesis& h) { return "HYP " + std::to_string(h.index); },
          [](const ExtensionAxiom& e) { return "EXT " + std::to_string(e.index); },
          [](const ModusPonens& mp) {
            return "MP " + std::to_string(mp.major + 1) + " " +
                   std::to_string(mp.minor + 1);
          },
      },
      just);
}

}  // namespace

std::string write_proof(const Proof& proof, const Extension& ext) {
  std::string out;
  if (!proof.hypotheses.empty()) out += "hyp: " + join_formulas(proof.hypotheses) + "\n";
  if (!ext.added_axioms.empty()) out += "ext: " + join_formulas(ext.added_axioms) + "\n";
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    out += std::to_string(i + 1);
    out += ". ";
    out += print(proof.steps[i].formula);
    out += " | ";
    out += justification_text(proof.steps[i].justification);
    out += '\n';
  }
  return out;
}

// --- reading -------------------------------------------------------------

namespace {

struct Line {
  std::string_view text;
  std::size_t offset;  // byte offset of the line start in the whole input
  std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    out.push_back({line, start, number});
    if (end == text.size()) break;
    start = end + 1;
    ++number;
  }
  return out;
}

bool blank(std::string_view s) {
  for (char c : s)
    if (c != ' ' && c != '\t') return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail_line(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what, line.offset);
}

Formula parse_at(const Line& line, std::string_view text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line.number) + ": " + e.what(),
                     line.offset + e.offset);
  }
}

std::vector<Formula> parse_formula_list(const Line& line, std::string_view text) {
  std::vector<Formula> out;
  std::size_t start = 0;
  while (true) {
    std::size_t semi = text.find(';', start);
    std::string_view piece = trim(text.substr(
        start, semi == std::string_view::npos ? std::string_view::npos : semi - start));
    if (piece.empty()) fail_line(line, "empty formula in list");
    out.push_back(parse_at(line, piece));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

std::size_t parse_index(const Line& line, std::string_view text, const char* what) {
  text = trim(text);
  if (text.empty()) fail_line(line, std::string("missing ") + what);
  std::size_t value = 0;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail_line(line, std::string("malformed ") + what + ": '" + std::string(text) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  return value;
}

// Splits "A:=f1,B:=f2" at top-level commas (commas inside parentheses
// belong to no binding since formulas contain none, but stay safe anyway).
Justification parse_axiom_justification(const Line& line, std::string_view text) {
  auto id = scheme_from_name(text.substr(0, 3));
  if (!id) fail_line(line, "unknown justification: '" + std::string(text) + "'");
  std::string_view rest = text.substr(3);
  if (rest.empty() || rest.front() != '{' || rest.back() != '}')
    fail_line(line, "expected {...} after scheme name");
  std::string_view body = rest.substr(1, rest.size() - 2);
  Substitution sub;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i < body.size() && body[i] == '(') ++depth;
    if (i < body.size() && body[i] == ')') --depth;
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      std::string_view binding = trim(body.substr(start, i - start));
      std::size_t sep = binding.find(":=");
      if (sep == std::string_view::npos || sep == 0)
        fail_line(line, "malformed binding: '" + std::string(binding) + "'");
      std::string_view name = trim(binding.substr(0, sep));
      if (name.size() != 1) fail_line(line, "malformed metavariable name");
      try {
        sub.bind(name[0], parse_at(line, trim(binding.substr(sep + 2))));
      } catch (const Error& e) {
        if (dynamic_cast<const ParseError*>(&e)) throw;
        fail_line(line, e.what());
      }
      start = i + 1;
    }
  }
  return AxiomInstance{*id, std::move(sub)};
}

Justification parse_justification(const Line& line, std::string_view text) {
  text = trim(text);
  if (text.rfind("AX", 0) == 0) return parse_axiom_justification(line, text);
  if (text.rfind("HYP ", 0) == 0)
    return Hypothesis{parse_index(line, text.substr(4), "hypothesis index")};
  if (text.rfind("EXT ", 0) == 0)
    return ExtensionAxiom{parse_index(line, text.substr(4), "extension axiom index")};
  if (text.rfind("MP ", 0) == 0) {
    std::string_view rest = trim(text.substr(3));
    std::size_t space = rest.find(' ');
    if (space == std::string_view::npos) fail_line(line, "MP needs two step numbers");
    std::size_t major = parse_index(line, rest.substr(0, space), "step number");
    std::size_t minor = parse_index(line, rest.substr(space + 1), "step number");
    if (major == 0 || minor == 0) fail_line(line, "MP step numbers are 1-based");
    return ModusPonens{major - 1, minor - 1};
  }
  fail_line(line, "unknown justification: '" + std::string(text) + "'");
}

}  // namespace

ProofFile read_proof(std::string_view text) {
  ProofFile pf;
  bool seen_hyp = false, seen_ext = false;
  std::size_t next_step = 1;
  for (const Line& line : split_lines(text)) {
    if (blank(line.text)) continue;
    if (line.text.rfind("hyp:", 0) == 0) {
      if (next_step > 1) fail_line(line, "hyp: header after the first step");
      if (seen_hyp) fail_line(line, "duplicate hyp: header");
      seen_hyp = true;
      pf.proof.hypotheses = parse_formula_list(line, trim(line.text.substr(4)));
      continue;
    }
    if (line.text.rfind("ext:", 0) == 0) {
      if (next_step > 1) fail_line(line, "ext: header after the first step");
      if (seen_ext) fail_line(line, "duplicate ext: header");
      seen_ext = true;
      pf.extension.added_axioms = parse_formula_list(line, trim(line.text.substr(4)));
      continue;
    }
    // step line: "<n>. <formula> | <justification>"
    std::size_t dot = line.text.find('.');
    if (dot == std::string_view::npos || dot == 0)
      fail_line(line, "expected a step number");
    std::size_t number = parse_index(line, line.text.substr(0, dot), "step number");
    if (number != next_step)
      fail_line(line, "expected step " + std::to_string(next_step) + ", found " +
                          std::to_string(number));
    std::string_view rest = line.text.substr(dot + 1);
    std::size_t bar = rest.find('|');
    if (bar == std::string_view::npos)
      fail_line(line, "expected '|' between formula and justification");
    Formula f = parse_at(line, trim(rest.substr(0, bar)));
    Justification just = parse_justification(line, rest.substr(bar + 1));
    pf.proof.steps.push_back({std::move(f), std::move(just)});
    ++next_step;
  }
  if (pf.proof.steps.empty())
    throw ParseError("proof file has no steps", text.size());
  return pf;
}

}  // namespace ipc
