#pragma once

#include <cstddef>

#include "ipc/proof.hpp"

namespace ipc {

// A Proof whose hypothesis list is actively used: a deduction from Γ.
using Derivation = Proof;

// Five-step derivation of a -> a from AX1 and AX2 alone.
Proof prove_identity(const Formula& a);

// Deduction theorem, constructively: from a derivation d whose hypotheses
// include a, builds a proof of a -> conclusion(d) from the hypotheses of d
// minus every occurrence of a. Each step of d maps to a bounded number of
// steps, so the output is linear in the input. Extension-axiom steps are
// carried over untouched, so validity is preserved relative to any
// extension. Throws Error when d is empty or a is not among its hypotheses.
Proof deduction_transform(const Derivation& d, const Formula& a);

// Converts a proof using added axiom ext.added_axioms[index] into a proof
// of (that axiom) -> conclusion(p) under the extension without it. The
// other added axioms keep their relative order. Works even when the axiom
// is never cited (vacuous discharge).
Proof discharge_extension_axiom(const Proof& p, const Extension& ext, std::size_t index);

// The eight derived implication laws, writing Qx for x -> q:
//   1  (a -> b) -> ((b -> c) -> (a -> c))
//   2  (a -> b) -> (Qb -> Qa)
//   3  a -> QQa
//   4  QQQa -> Qa
//   5  QQb -> QQ(a -> b)
//   6  QQa -> (Qb -> Q(a -> b))
//   7  Qa -> QQ(a -> b)
//   8  (Qa -> b) -> ((QQa -> b) -> QQb)
// Every part except 7 is derivable from AX1 and AX2 alone; part 7 needs
// AX3 as well.
inline constexpr int kTheorem1PartCount = 8;

struct Theorem1Part {
  int index;
  bool uses_a, uses_b, uses_c;
  bool uses_q;
  bool needs_peirce;
};

const Theorem1Part& theorem1_part(int index);  // 1-based; throws Error out of range

struct Theorem1Args {
  Formula q = Formula::var("q");
  Formula a = Formula::var("p");
  Formula b = Formula::var("r");
  Formula c = Formula::var("s");
};

// The concrete statement of part `index` instantiated at args.
Formula theorem1_statement(int index, const Theorem1Args& args = {});

// Hypothesis-free kernel-valid proof of theorem1_statement(index, args) in
// the base system. Parts other than 7 contain no AX3 step; part 7 contains
// at least one. The derivations are assembled from hypothetical deductions
// compiled through deduction_transform, not hard-coded step lists.
Proof derive_theorem1(int index, const Theorem1Args& args = {});

// Given hypothesis-free proofs under ext of some A and of A -> q, splices
// them (through part 3 above) into a hypothesis-free proof of q itself
// under ext — exhibiting the q-inconsistency of ext. Throws Error when
// either input has hypotheses or fails the kernel check, or when the
// conclusions are not related as A and A -> q.
Proof inconsistency_from_witness(const Extension& ext, const Formula& q,
                                 const Proof& proof_a, const Proof& proof_qa);

}  // namespace ipc
