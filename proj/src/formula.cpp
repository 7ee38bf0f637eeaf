#include "ipc/formula.hpp"

#include <cctype>
#include <ostream>
#include <utility>
#include <vector>

#include "ipc/error.hpp"

namespace ipc {

namespace {

std::size_t hash_mix(std::size_t a, std::size_t b) {
  std::size_t x = a + 0x9e3779b97f4a7c15ull + (b << 6) + (b >> 2);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  return x;
}

bool is_identifier(std::string_view name, bool lowercase_start) {
  if (name.empty()) return false;
  unsigned char first = static_cast<unsigned char>(name.front());
  if (lowercase_start ? !std::islower(first) : !std::isalpha(first)) return false;
  for (char ch : name.substr(1)) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && ch != '_') return false;
  }
  return true;
}

}  // namespace

bool is_valid_variable_name(std::string_view name) {
  return is_identifier(name, /*lowercase_start=*/true);
}

Formula Formula::var(std::string name) {
  // Uppercase-initial names are allowed here so scheme templates can carry
  // metavariable leaves; the surface grammar only produces lowercase ones.
  if (!is_identifier(name, /*lowercase_start=*/false))
    throw Error("invalid variable name: '" + name + "'");
  auto node = std::make_shared<Node>();
  node->leaves = 1;
  node->hash = hash_mix(0x1eaf, std::hash<std::string>{}(name));
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::implies(Formula antecedent, Formula consequent) {
  auto node = std::make_shared<Node>();
  node->leaves = antecedent.leaf_count() + consequent.leaf_count();
  node->hash = hash_mix(antecedent.hash(), consequent.hash());
  node->lhs = std::move(antecedent.node_);
  node->rhs = std::move(consequent.node_);
  return Formula(std::move(node));
}

const std::string& Formula::var_name() const {
  if (!is_var()) throw Error("var_name: formula is an implication");
  return node_->name;
}

Formula Formula::antecedent() const {
  if (!is_implication()) throw Error("antecedent: formula is a variable");
  return Formula(node_->lhs);
}

Formula Formula::consequent() const {
  if (!is_implication()) throw Error("consequent: formula is a variable");
  return Formula(node_->rhs);
}

bool Formula::nodes_equal(const Node* a, const Node* b) {
  if (a == b) return true;
  if (a->hash != b->hash || a->leaves != b->leaves) return false;
  if (a->lhs == nullptr) return b->lhs == nullptr && a->name == b->name;
  if (b->lhs == nullptr) return false;
  return nodes_equal(a->lhs.get(), b->lhs.get()) &&
         nodes_equal(a->rhs.get(), b->rhs.get());
}

bool operator==(const Formula& a, const Formula& b) {
  return Formula::nodes_equal(a.node_.get(), b.node_.get());
}

int Formula::nodes_compare(const Node* a, const Node* b) {
  if (a == b) return 0;
  bool a_var = a->lhs == nullptr, b_var = b->lhs == nullptr;
  if (a_var != b_var) return a_var ? -1 : 1;  // variables before implications
  if (a_var) return a->name.compare(b->name);
  if (int c = nodes_compare(a->lhs.get(), b->lhs.get())) return c;
  return nodes_compare(a->rhs.get(), b->rhs.get());
}

int Formula::compare_structure(const Formula& other) const {
  return nodes_compare(node_.get(), other.node_.get());
}

bool canonical_less(const Formula& a, const Formula& b) {
  if (a.leaf_count() != b.leaf_count()) return a.leaf_count() < b.leaf_count();
  return print(a) < print(b);
}

namespace {

void print_into(const Formula& f, std::string& out) {
  if (f.is_var()) {
    out += f.var_name();
    return;
  }
  out += '(';
  print_into(f.antecedent(), out);
  out += " -> ";
  print_into(f.consequent(), out);
  out += ')';
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  out.reserve(f.leaf_count() * 8);
  print_into(f, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) {
  return os << print(f);
}

Formula q_wrap(const Formula& q, const Formula& a) {
  return Formula::implies(a, q);
}

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
  if (f.is_var()) {
    out.insert(f.var_name());
    return;
  }
  collect_variables(f.antecedent(), out);
  collect_variables(f.consequent(), out);
}

}  // namespace

std::set<std::string> variables_of(const Formula& f) {
  std::set<std::string> out;
  collect_variables(f, out);
  return out;
}

// --- parsing -------------------------------------------------------------

namespace {

constexpr std::string_view kUtf8Arrow = "\xE2\x8A\x83";  // U+2283

struct Token {
  enum Kind { Ident, Arrow, LParen, RParen, End } kind;
  std::string text;
  std::size_t offset;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '(') {
      out.push_back({Token::LParen, "(", i});
      ++i;
      continue;
    }
    if (c == ')') {
      out.push_back({Token::RParen, ")", i});
      ++i;
      continue;
    }
    if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        out.push_back({Token::Arrow, "->", i});
        i += 2;
        continue;
      }
      throw ParseError("expected '->' at offset " + std::to_string(i), i);
    }
    if (text.substr(i, kUtf8Arrow.size()) == kUtf8Arrow) {
      out.push_back({Token::Arrow, "->", i});
      i += kUtf8Arrow.size();
      continue;
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      std::size_t j = i + 1;
      while (j < text.size()) {
        unsigned char u = static_cast<unsigned char>(text[j]);
        if (std::isalnum(u) || text[j] == '_')
          ++j;
        else
          break;
      }
      out.push_back({Token::Ident, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "' at offset " +
                         std::to_string(i),
                     i);
  }
  out.push_back({Token::End, "", text.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  Formula implication() {
    Formula left = atom();
    if (peek().kind == Token::Arrow) {
      next();
      return Formula::implies(std::move(left), implication());
    }
    return left;
  }

  const Token& peek() const { return tokens_[pos_]; }

 private:
  Formula atom() {
    const Token& t = peek();
    if (t.kind == Token::Ident) {
      next();
      return Formula::var(t.text);
    }
    if (t.kind == Token::LParen) {
      next();
      Formula f = implication();
      if (peek().kind != Token::RParen)
        throw ParseError("expected ')' at offset " + std::to_string(peek().offset),
                         peek().offset);
      next();
      return f;
    }
    throw ParseError("expected a variable or '(' at offset " + std::to_string(t.offset),
                     t.offset);
  }

  void next() { ++pos_; }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text) {
  std::vector<Token> tokens = lex(text);
  Parser parser(tokens);
  Formula f = parser.implication();
  if (parser.peek().kind != Token::End)
    throw ParseError("unexpected trailing input at offset " +
                         std::to_string(parser.peek().offset),
                     parser.peek().offset);
  return f;
}

}  // namespace ipc
