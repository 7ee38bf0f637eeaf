#include <map>
#include <sstream>

#include "doctest.h"
#include "ipc/error.hpp"
#include "ipc/formula.hpp"

using namespace ipc;

TEST_CASE("variables and implications print canonically") {
  CHECK(print(Formula::var("p")) == "p");
  CHECK(print(Formula::implies(Formula::var("p"), Formula::var("q"))) == "(p -> q)");
  Formula peirce = parse("((p->q)->p)->p");
  CHECK(print(peirce) == "(((p -> q) -> p) -> p)");
  std::ostringstream os;
  os << peirce;
  CHECK(os.str() == print(peirce));
}

TEST_CASE("parsing is right-associative and ignores whitespace") {
  CHECK(parse("p->q->r") == parse("p -> (q -> r)"));
  CHECK(parse("p->q->r") != parse("(p -> q) -> r"));
  CHECK(parse("  p\t->\n q ") == parse("p->q"));
  CHECK(parse("(p)") == parse("p"));
  CHECK(parse("((p -> q))") == parse("p->q"));
}

TEST_CASE("the UTF-8 arrow is a synonym for ->") {
  CHECK(parse("p \xE2\x8A\x83 q") == parse("p -> q"));
  CHECK(parse("p\xE2\x8A\x83q\xE2\x8A\x83r") == parse("p -> (q -> r)"));
}

TEST_CASE("identifiers allow digits and underscores after a lowercase start") {
  CHECK(parse("x1")  == Formula::var("x1"));
  CHECK(parse("ab_C3") == Formula::var("ab_C3"));
  CHECK(variables_of(parse("foo -> bar2 -> foo")) ==
        std::set<std::string>{"bar2", "foo"});
}

TEST_CASE("parse errors carry the byte offset") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p ->"), ParseError);
  CHECK_THROWS_AS(parse("-> p"), ParseError);
  CHECK_THROWS_AS(parse("(p -> q"), ParseError);
  CHECK_THROWS_AS(parse("p q"), ParseError);
  CHECK_THROWS_AS(parse("p - q"), ParseError);
  CHECK_THROWS_AS(parse("P"), ParseError);  // surface grammar is lowercase-only
  try {
    parse("p -> ?");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 5);
    CHECK(std::string(e.what()).find("offset 5") != std::string::npos);
  }
  try {
    parse("p) -> q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 1);  // trailing input after a complete formula
  }
}

TEST_CASE("round trips: parse after print and print after parse") {
  for (const char* text : {"p", "(p -> q)", "((p -> q) -> (q -> p))",
                           "(p -> (q -> (r -> p)))", "(((a -> b) -> a) -> a)"}) {
    Formula f = parse(text);
    CHECK(print(f) == text);
    CHECK(parse(print(f)) == f);
  }
}

TEST_CASE("leaf_count measures variable occurrences") {
  CHECK(parse("p").leaf_count() == 1);
  CHECK(parse("p -> p").leaf_count() == 2);
  CHECK(parse("((p->q)->p)->p").leaf_count() == 4);
}

TEST_CASE("structural equality and hashing") {
  Formula a = parse("(p -> q) -> p");
  Formula b = parse("(p->q)->p");
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(a != parse("p -> (q -> p)"));
  CHECK(Formula::var("p") != Formula::var("q"));
}

TEST_CASE("q_wrap builds A -> Q") {
  Formula q = parse("q"), a = parse("p -> r");
  CHECK(q_wrap(q, a) == parse("(p -> r) -> q"));
  CHECK(print(q_wrap(q, q_wrap(q, a))) == "(((p -> r) -> q) -> q)");
}

TEST_CASE("accessors reject the wrong shape") {
  CHECK_THROWS_AS(parse("p").antecedent(), Error);
  CHECK_THROWS_AS(parse("p").consequent(), Error);
  CHECK_THROWS_AS(parse("p -> q").var_name(), Error);
  CHECK(parse("p -> q").antecedent() == parse("p"));
  CHECK(parse("p -> q").consequent() == parse("q"));
}

TEST_CASE("canonical_less orders by size then text") {
  CHECK(canonical_less(parse("p"), parse("q")));
  CHECK(canonical_less(parse("q"), parse("p -> p")));
  CHECK(canonical_less(parse("p -> q"), parse("q -> p")));
  CHECK(!canonical_less(parse("p -> p"), parse("z")));
}

TEST_CASE("FormulaLess is usable as an ordered-container comparator") {
  std::map<Formula, int, FormulaLess> m;
  m[parse("p")] = 1;
  m[parse("p -> q")] = 2;
  m[parse("(p -> q) -> p")] = 3;
  CHECK(m.at(parse("p")) == 1);
  CHECK(m.at(parse("(p->q)->p")) == 3);
  CHECK(m.size() == 3);
  m[parse("p")] = 9;
  CHECK(m.size() == 3);
}

TEST_CASE("Formula::var validates names but admits scheme metavariables") {
  CHECK_THROWS_AS(Formula::var(""), Error);
  CHECK_THROWS_AS(Formula::var("1x"), Error);
  CHECK_THROWS_AS(Formula::var("p q"), Error);
  CHECK(Formula::var("A").var_name() == "A");  // usable as a scheme leaf
  CHECK(is_valid_variable_name("p0_x"));
  CHECK(!is_valid_variable_name("A"));
  CHECK(!is_valid_variable_name(""));
}
