#include <random>
#include <string>

#include "doctest.h"
#include "ipc/error.hpp"
#include "ipc/proof_io.hpp"
#include "proof_gen.hpp"

using namespace ipc;

namespace {

// p, p -> q, q -> r  ⊢  s -> r, exercising every justification kind
ProofFile sample() {
  ProofFile pf;
  pf.proof.hypotheses = {parse("p"), parse("p -> q")};
  pf.extension.added_axioms = {parse("q -> r")};
  pf.proof.steps = {
      {parse("p"), Hypothesis{0}},
      {parse("p -> q"), Hypothesis{1}},
      {parse("q"), ModusPonens{1, 0}},
      {parse("q -> r"), ExtensionAxiom{0}},
      {parse("r"), ModusPonens{3, 2}},
      {parse("r -> (s -> r)"), AxiomInstance{SchemeId::AX1, sub_ab(parse("r"), parse("s"))}},
      {parse("s -> r"), ModusPonens{5, 4}},
  };
  return pf;
}

const char* kSampleText =
    "hyp: p ; (p -> q)\n"
    "ext: (q -> r)\n"
    "1. p | HYP 0\n"
    "2. (p -> q) | HYP 1\n"
    "3. q | MP 2 1\n"
    "4. (q -> r) | EXT 0\n"
    "5. r | MP 4 3\n"
    "6. (r -> (s -> r)) | AX1{A:=r,B:=s}\n"
    "7. (s -> r) | MP 6 5\n";

}  // namespace

TEST_CASE("write_proof emits the canonical text") {
  ProofFile pf = sample();
  CHECK(write_proof(pf.proof, pf.extension) == kSampleText);
  CHECK(check(pf.proof, pf.extension) == parse("s -> r"));
}

TEST_CASE("write_proof omits empty headers") {
  Proof p;
  p.steps = {{parse("p -> (q -> p)"), AxiomInstance{SchemeId::AX1, sub_ab(parse("p"), parse("q"))}}};
  CHECK(write_proof(p, Extension{}) == "1. (p -> (q -> p)) | AX1{A:=p,B:=q}\n");
}

TEST_CASE("three-metavariable instances list all bindings") {
  Substitution s = sub_abc(parse("p"), parse("q -> q"), parse("r"));
  Proof p;
  p.steps = {{apply(s, scheme_body(SchemeId::AX2)), AxiomInstance{SchemeId::AX2, s}}};
  CHECK(write_proof(p, Extension{}) ==
        "1. ((p -> ((q -> q) -> r)) -> ((p -> (q -> q)) -> (p -> r))) | "
        "AX2{A:=p,B:=(q -> q),C:=r}\n");
}

TEST_CASE("read_proof parses the canonical text back") {
  ProofFile pf = read_proof(kSampleText);
  CHECK(pf == sample());
}

TEST_CASE("read_proof tolerates blank lines, CRLF, and stray spaces") {
  ProofFile pf = read_proof(
      "\n"
      "hyp:   p ;   (p -> q)  \r\n"
      "\t\n"
      "1.   p   |   HYP   0\r\n"
      "2. (p -> q)|HYP 1\n"
      "3. q | MP 2 1");
  Proof expect;
  expect.hypotheses = {parse("p"), parse("p -> q")};
  expect.steps = {{parse("p"), Hypothesis{0}},
                  {parse("p -> q"), Hypothesis{1}},
                  {parse("q"), ModusPonens{1, 0}}};
  CHECK(pf.proof == expect);
  CHECK(pf.extension.is_base());
}

TEST_CASE("round trip: read after write is the identity") {
  std::mt19937 rng(90210);
  proof_gen::ProofOptions opt;
  opt.ext = {parse("p -> r"), parse("q")};
  for (int trial = 0; trial < 300; ++trial) {
    Proof p = proof_gen::random_proof(rng, opt);
    Extension ext{opt.ext};
    std::string text = write_proof(p, ext);
    ProofFile back = read_proof(text);
    CHECK(back.proof == p);
    CHECK(back.extension == ext);
    CHECK(write_proof(back.proof, back.extension) == text);
  }
}

TEST_CASE("an empty file is not a proof") {
  try {
    read_proof("");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.what() == std::string("proof file has no steps"));
    CHECK(e.offset == 0);
  }
  CHECK_THROWS_AS(read_proof("hyp: p\n"), ParseError);
  CHECK_THROWS_AS(read_proof("\n  \n"), ParseError);
}

TEST_CASE("step numbers must be sequential from 1") {
  CHECK_THROWS_WITH_AS(read_proof("2. p | HYP 0\n"), "line 1: expected step 1, found 2",
                       ParseError);
  CHECK_THROWS_WITH_AS(read_proof("1. p | HYP 0\n3. p | HYP 0\n"),
                       "line 2: expected step 2, found 3", ParseError);
}

TEST_CASE("headers must precede the steps and not repeat") {
  CHECK_THROWS_WITH_AS(read_proof("1. p | HYP 0\nhyp: p\n"),
                       "line 2: hyp: header after the first step", ParseError);
  CHECK_THROWS_WITH_AS(read_proof("ext: p\next: q\n1. p | EXT 0\n"),
                       "line 2: duplicate ext: header", ParseError);
  CHECK_THROWS_WITH_AS(read_proof("hyp: p\nhyp: q\n1. p | HYP 0\n"),
                       "line 2: duplicate hyp: header", ParseError);
  CHECK_THROWS_WITH_AS(read_proof("hyp: \n1. p | HYP 0\n"), "line 1: empty formula in list",
                       ParseError);
  CHECK_THROWS_WITH_AS(read_proof("hyp: p ;\n1. p | HYP 0\n"),
                       "line 1: empty formula in list", ParseError);
}

TEST_CASE("malformed step lines") {
  CHECK_THROWS_WITH_AS(read_proof("p | HYP 0\n"), "line 1: expected a step number",
                       ParseError);
  CHECK_THROWS_WITH_AS(read_proof("1. p HYP 0\n"),
                       "line 1: expected '|' between formula and justification", ParseError);
  CHECK_THROWS_WITH_AS(read_proof("x. p | HYP 0\n"),
                       "line 1: malformed step number: 'x'", ParseError);
}

TEST_CASE("malformed justifications") {
  CHECK_THROWS_WITH_AS(read_proof("1. p | BY MAGIC\n"),
                       "line 1: unknown justification: 'BY MAGIC'", ParseError);
  CHECK_THROWS_WITH_AS(read_proof("1. p | HYP x\n"),
                       "line 1: malformed hypothesis index: 'x'", ParseError);
  CHECK_THROWS_WITH_AS(read_proof("1. p | MP 2\n"), "line 1: MP needs two step numbers",
                       ParseError);
  CHECK_THROWS_WITH_AS(read_proof("1. p | MP 0 1\n"), "line 1: MP step numbers are 1-based",
                       ParseError);
  CHECK_THROWS_WITH_AS(read_proof("1. p | AX1 A:=p\n"),
                       "line 1: expected {...} after scheme name", ParseError);
  CHECK_THROWS_WITH_AS(read_proof("1. p | AX9{A:=p}\n"),
                       "line 1: unknown justification: 'AX9{A:=p}'", ParseError);
  CHECK_THROWS_WITH_AS(read_proof("1. p | AX1{A=p,B:=q}\n"),
                       "line 1: malformed binding: 'A=p'", ParseError);
  CHECK_THROWS_WITH_AS(read_proof("1. p | AX1{A:=p,A:=q}\n"),
                       "line 1: metavariable A is already bound", ParseError);
}

TEST_CASE("formula errors carry the line number") {
  try {
    read_proof("1. p -> | HYP 0\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 1: ", 0) == 0);
  }
  try {
    read_proof("1. p | HYP 0\n2. q -> ) | HYP 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
  }
}

TEST_CASE("a read proof can cite indices the checker later rejects") {
  // reading is purely syntactic; verification is the kernel's job
  ProofFile pf = read_proof("1. p | HYP 7\n");
  CHECK(pf.proof.steps[0].justification == Justification{Hypothesis{7}});
  CHECK_THROWS_AS(check(pf.proof, pf.extension), ProofError);
}
