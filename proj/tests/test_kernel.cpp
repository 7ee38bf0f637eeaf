#include <random>
#include <string>

#include "doctest.h"
#include "ipc/error.hpp"
#include "ipc/proof.hpp"
#include "proof_gen.hpp"

using namespace ipc;

namespace {

Proof identity_proof(const Formula& a) {
  Formula aa = Formula::implies(a, a);
  Proof p;
  p.steps = {
      {Formula::implies(a, Formula::implies(aa, a)), AxiomInstance{SchemeId::AX1, sub_ab(a, aa)}},
      {Formula::implies(Formula::implies(a, Formula::implies(aa, a)),
                        Formula::implies(Formula::implies(a, aa), aa)),
       AxiomInstance{SchemeId::AX2, sub_abc(a, aa, a)}},
      {Formula::implies(Formula::implies(a, aa), aa), ModusPonens{1, 0}},
      {Formula::implies(a, aa), AxiomInstance{SchemeId::AX1, sub_ab(a, a)}},
      {aa, ModusPonens{2, 3}},
  };
  return p;
}

}  // namespace

TEST_CASE("scheme names round-trip") {
  CHECK(scheme_name(SchemeId::AX1) == "AX1");
  CHECK(scheme_name(SchemeId::AX2) == "AX2");
  CHECK(scheme_name(SchemeId::AX3) == "AX3");
  for (SchemeId id : kAllSchemes) CHECK(scheme_from_name(scheme_name(id)) == id);
  CHECK(!scheme_from_name("AX4").has_value());
  CHECK(!scheme_from_name("ax1").has_value());
}

TEST_CASE("scheme bodies and metavariable lists") {
  CHECK(print(scheme_body(SchemeId::AX1)) == "(A -> (B -> A))");
  CHECK(print(scheme_body(SchemeId::AX2)) ==
        "((A -> (B -> C)) -> ((A -> B) -> (A -> C)))");
  CHECK(print(scheme_body(SchemeId::AX3)) == "(((A -> B) -> A) -> A)");
  CHECK(scheme_metavariables(SchemeId::AX1).size() == 2);
  CHECK(scheme_metavariables(SchemeId::AX2).size() == 3);
  CHECK(scheme_metavariables(SchemeId::AX3).size() == 2);
  CHECK(is_metavariable(Formula::var("A")));
  CHECK(!is_metavariable(Formula::var("p")));
  CHECK(!is_metavariable(parse("p -> q")));
}

TEST_CASE("substitution binding rules") {
  Substitution s;
  CHECK(!s.has('A'));
  s.bind('A', parse("p -> q"));
  CHECK(s.has('A'));
  CHECK(s.at('A') == parse("p -> q"));
  CHECK_NOTHROW(s.bind('A', parse("p -> q")));  // same formula again is fine
  CHECK_THROWS_WITH_AS(s.bind('A', parse("q")), "metavariable A is already bound", Error);
  CHECK_THROWS_WITH_AS(s.at('B'), "unbound metavariable B", Error);
  CHECK_THROWS_AS(s.bind('D', parse("p")), Error);
}

TEST_CASE("apply performs simultaneous replacement") {
  Formula got = apply(sub_ab(parse("p -> q"), parse("r")), scheme_body(SchemeId::AX1));
  CHECK(print(got) == "((p -> q) -> (r -> (p -> q)))");
  // an unbound metavariable in the body is an error
  Substitution partial;
  partial.bind('A', parse("p"));
  CHECK_THROWS_AS(apply(partial, scheme_body(SchemeId::AX1)), Error);
}

TEST_CASE("match_scheme inverts apply") {
  std::mt19937 rng(2026);
  std::vector<Formula> vars = {Formula::var("p"), Formula::var("q"), Formula::var("r")};
  for (int trial = 0; trial < 200; ++trial) {
    for (SchemeId id : kAllSchemes) {
      Substitution sub;
      for (char mv : scheme_metavariables(id))
        sub.bind(mv, proof_gen::random_formula(rng, vars, 4));
      Formula inst = apply(sub, scheme_body(id));
      auto found = match_scheme(id, inst);
      REQUIRE(found.has_value());
      CHECK(*found == sub);
      CHECK(apply(*found, scheme_body(id)) == inst);
    }
  }
}

TEST_CASE("match_scheme rejects non-instances") {
  CHECK(!match_scheme(SchemeId::AX1, parse("p")).has_value());
  CHECK(!match_scheme(SchemeId::AX1, parse("p -> (q -> q)")).has_value());
  // AX1 shape with inconsistent reuse of A
  CHECK(!match_scheme(SchemeId::AX3, parse("((p -> q) -> p) -> q")).has_value());
  CHECK(!match_scheme(SchemeId::AX2, parse("(p -> (q -> r)) -> ((p -> q) -> (p -> r)) -> p"))
             .has_value());
  // a genuine instance of a different scheme
  CHECK(match_scheme(SchemeId::AX1, parse("p -> (q -> p)")).has_value());
  CHECK(!match_scheme(SchemeId::AX2, parse("p -> (q -> p)")).has_value());
}

TEST_CASE("check accepts the identity proof") {
  Formula a = parse("p");
  Proof p = identity_proof(a);
  CHECK(check(p, Extension{}) == parse("p -> p"));
  CHECK(p.conclusion() == parse("p -> p"));
}

TEST_CASE("check accepts hypothesis and extension citations") {
  Proof p;
  p.hypotheses = {parse("p -> q")};
  p.steps = {
      {parse("p -> q"), Hypothesis{0}},
      {parse("p"), ExtensionAxiom{0}},
      {parse("q"), ModusPonens{0, 1}},
  };
  Extension ext{{parse("p")}};
  CHECK(check(p, ext) == parse("q"));
}

TEST_CASE("check rejects an empty proof") {
  CHECK_THROWS_WITH_AS(check(Proof{}, Extension{}), "proof has no steps", ProofError);
  CHECK_THROWS_WITH_AS(Proof{}.conclusion(), "proof has no steps", Error);
}

TEST_CASE("check rejects a mislabeled axiom instance") {
  Proof p;
  p.steps = {{parse("p -> (q -> q)"), AxiomInstance{SchemeId::AX1, sub_ab(parse("p"), parse("q"))}}};
  CHECK_THROWS_WITH_AS(check(p, Extension{}), "step 1: formula is not the stated AX1 instance",
                       ProofError);
}

TEST_CASE("check rejects an incomplete substitution") {
  Substitution partial;
  partial.bind('A', parse("p"));
  Proof p;
  p.steps = {{parse("p -> (q -> p)"), AxiomInstance{SchemeId::AX1, partial}}};
  CHECK_THROWS_WITH_AS(check(p, Extension{}),
                       "step 1: incomplete axiom substitution: unbound metavariable B",
                       ProofError);
}

TEST_CASE("check rejects bad hypothesis citations") {
  Proof p;
  p.steps = {{parse("p"), Hypothesis{0}}};
  CHECK_THROWS_WITH_AS(check(p, Extension{}), "step 1: hypothesis index 0 out of range",
                       ProofError);
  p.hypotheses = {parse("q")};
  CHECK_THROWS_WITH_AS(check(p, Extension{}), "step 1: formula differs from hypothesis 0",
                       ProofError);
}

TEST_CASE("check rejects bad extension citations") {
  Proof p;
  p.steps = {{parse("p"), ExtensionAxiom{1}}};
  Extension ext{{parse("p")}};
  CHECK_THROWS_WITH_AS(check(p, ext), "step 1: extension axiom index 1 out of range",
                       ProofError);
  p.steps = {{parse("q"), ExtensionAxiom{0}}};
  CHECK_THROWS_WITH_AS(check(p, ext), "step 1: formula differs from extension axiom 0",
                       ProofError);
}

TEST_CASE("check rejects malformed modus ponens") {
  Proof self;
  self.steps = {{parse("p"), ModusPonens{0, 0}}};
  CHECK_THROWS_WITH_AS(check(self, Extension{}),
                       "step 1: modus ponens cites a step that is not strictly earlier",
                       ProofError);

  Proof nonimp;
  nonimp.hypotheses = {parse("p")};
  nonimp.steps = {{parse("p"), Hypothesis{0}}, {parse("q"), ModusPonens{0, 0}}};
  CHECK_THROWS_WITH_AS(check(nonimp, Extension{}),
                       "step 2: major premise (step 1) is not an implication", ProofError);

  Proof minor;
  minor.hypotheses = {parse("p -> q"), parse("r")};
  minor.steps = {{parse("p -> q"), Hypothesis{0}},
                 {parse("r"), Hypothesis{1}},
                 {parse("q"), ModusPonens{0, 1}}};
  CHECK_THROWS_WITH_AS(check(minor, Extension{}),
                       "step 3: minor premise does not match the antecedent of step 1",
                       ProofError);

  Proof concl;
  concl.hypotheses = {parse("p -> q"), parse("p")};
  concl.steps = {{parse("p -> q"), Hypothesis{0}},
                 {parse("p"), Hypothesis{1}},
                 {parse("r"), ModusPonens{0, 1}}};
  CHECK_THROWS_WITH_AS(check(concl, Extension{}),
                       "step 3: formula does not match the consequent of step 1", ProofError);
}

TEST_CASE("ProofError carries the 0-based step index") {
  Proof p;
  p.steps = {{parse("p"), Hypothesis{0}}};
  try {
    check(p, Extension{});
    FAIL("expected ProofError");
  } catch (const ProofError& e) {
    CHECK(e.step == 0);
  }
}

TEST_CASE("without_axiom drops exactly the named axiom") {
  Extension ext{{parse("p"), parse("q"), parse("r")}};
  CHECK(without_axiom(ext, 1) == Extension{{parse("p"), parse("r")}});
  CHECK(without_axiom(ext, 0) == Extension{{parse("q"), parse("r")}});
  CHECK(without_axiom(ext, 2) == Extension{{parse("p"), parse("q")}});
  CHECK_THROWS_AS(without_axiom(ext, 3), Error);
}

TEST_CASE("generated proofs verify, and a corrupted conclusion does not") {
  std::mt19937 rng(417);
  Extension ext{{parse("p -> r"), parse("r")}};
  proof_gen::ProofOptions opt;
  opt.max_steps = 12;
  opt.ext = ext.added_axioms;
  for (int trial = 0; trial < 300; ++trial) {
    Proof p = proof_gen::random_proof(rng, opt);
    REQUIRE(check(p, ext) == p.conclusion());

    Proof bad = p;
    bad.steps.back().formula = q_wrap(parse("q"), bad.steps.back().formula);
    try {
      check(bad, ext);
      FAIL("corrupted proof verified");
    } catch (const ProofError& e) {
      CHECK(e.step == bad.steps.size() - 1);
    }
  }
}
