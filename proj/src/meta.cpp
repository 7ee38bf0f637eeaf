#include "ipc/meta.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ipc/error.hpp"
#include "ipc/scheme.hpp"

namespace ipc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Assembles proofs step by step, validating shapes as it goes so that a
// mis-scripted derivation fails at construction rather than at the kernel.
class ProofBuilder {
 public:
  explicit ProofBuilder(std::vector<Formula> hypotheses) {
    proof_.hypotheses = std::move(hypotheses);
  }

  std::size_t axiom(SchemeId id, Substitution sub) {
    Formula f = apply(sub, scheme_body(id));
    return push(std::move(f), AxiomInstance{id, std::move(sub)});
  }
  std::size_t ax1(Formula a, Formula b) {
    return axiom(SchemeId::AX1, sub_ab(std::move(a), std::move(b)));
  }
  std::size_t ax2(Formula a, Formula b, Formula c) {
    return axiom(SchemeId::AX2, sub_abc(std::move(a), std::move(b), std::move(c)));
  }
  std::size_t ax3(Formula a, Formula b) {
    return axiom(SchemeId::AX3, sub_ab(std::move(a), std::move(b)));
  }

  std::size_t hypothesis(std::size_t k) {
    if (k >= proof_.hypotheses.size()) throw Error("builder: hypothesis index out of range");
    return push(proof_.hypotheses[k], Hypothesis{k});
  }

  std::size_t extension_axiom(std::size_t k, Formula f) {
    return push(std::move(f), ExtensionAxiom{k});
  }

  std::size_t modus_ponens(std::size_t major, std::size_t minor) {
    if (major >= proof_.steps.size() || minor >= proof_.steps.size())
      throw Error("builder: modus ponens cites a missing step");
    const Formula& maj = proof_.steps[major].formula;
    if (!maj.is_implication() || maj.antecedent() != proof_.steps[minor].formula)
      throw Error("builder: modus ponens shape mismatch");
    return push(maj.consequent(), ModusPonens{major, minor});
  }

  // Splices every step of sub onto the end. hyp_map sends sub's hypothesis
  // indices to hypothesis indices of this proof (formulas must agree);
  // extension-axiom steps are carried over as-is. Returns the index of
  // sub's conclusion within this proof.
  std::size_t include(const Proof& sub, const std::vector<std::size_t>& hyp_map = {}) {
    if (sub.steps.empty()) throw Error("builder: including an empty proof");
    const std::size_t offset = proof_.steps.size();
    for (const ProofStep& step : sub.steps) {
      Justification just = std::visit(
          overloaded{
              [&](const Hypothesis& h) -> Justification {
                if (h.index >= hyp_map.size())
                  throw Error("builder: include has no mapping for a hypothesis");
                std::size_t target = hyp_map[h.index];
                if (target >= proof_.hypotheses.size() ||
                    proof_.hypotheses[target] != sub.hypotheses[h.index])
                  throw Error("builder: include maps a hypothesis to a different formula");
                return Hypothesis{target};
              },
              [&](const ModusPonens& mp) -> Justification {
                return ModusPonens{mp.major + offset, mp.minor + offset};
              },
              [](const auto& other) -> Justification { return other; },
          },
          step.justification);
      proof_.steps.push_back({step.formula, std::move(just)});
    }
    return proof_.steps.size() - 1;
  }

  const Formula& formula(std::size_t index) const { return proof_.steps.at(index).formula; }

  Proof take() {
    if (proof_.steps.empty()) throw Error("builder: empty proof");
    return std::move(proof_);
  }

 private:
  std::size_t push(Formula f, Justification just) {
    proof_.steps.push_back({std::move(f), std::move(just)});
    return proof_.steps.size() - 1;
  }

  Proof proof_;
};

// The deduction-theorem induction. Discharges, simultaneously, every
// hypothesis position whose flag is set; all flagged positions must hold
// the formula a. Every step F of d becomes a step a -> F: the flagged
// hypothesis itself via a fresh identity derivation, axioms and surviving
// hypotheses and extension axioms via AX1 + MP, and modus ponens steps via
// AX2 + MP + MP. A fresh identity splice per occurrence keeps the
// transformed image of step i the newest step, so the conclusion of the
// result is always a -> conclusion(d).
Proof discharge_flagged(const Proof& d, const Formula& a, const std::vector<bool>& flags) {
  if (d.steps.empty()) throw Error("deduction transform: empty derivation");

  std::vector<Formula> kept;
  std::vector<std::size_t> remap(d.hypotheses.size());
  for (std::size_t h = 0; h < d.hypotheses.size(); ++h) {
    if (flags[h]) {
      if (d.hypotheses[h] != a)
        throw Error("deduction transform: flagged hypothesis is not the discharged formula");
      continue;
    }
    remap[h] = kept.size();
    kept.push_back(d.hypotheses[h]);
  }

  ProofBuilder out(kept);
  std::vector<std::size_t> image(d.steps.size());  // step of out proving a -> F_i

  auto wrap = [&](std::size_t plain) {
    // plain : F  becomes  a -> F  through AX1{A:=F, B:=a}.
    std::size_t k = out.ax1(out.formula(plain), a);
    return out.modus_ponens(k, plain);
  };

  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const ProofStep& step = d.steps[i];
    image[i] = std::visit(
        overloaded{
            [&](const AxiomInstance& ax) {
              return wrap(out.axiom(ax.scheme, ax.substitution));
            },
            [&](const Hypothesis& h) {
              if (h.index >= flags.size())
                throw Error("deduction transform: hypothesis index out of range");
              if (flags[h.index]) return out.include(prove_identity(a));
              return wrap(out.hypothesis(remap[h.index]));
            },
            [&](const ExtensionAxiom& e) {
              return wrap(out.extension_axiom(e.index, step.formula));
            },
            [&](const ModusPonens& mp) {
              if (mp.major >= i || mp.minor >= i)
                throw Error("deduction transform: step cites a step that is not earlier");
              // have a -> (G -> F) and a -> G; AX2 gives a -> F.
              const Formula& g = d.steps[mp.minor].formula;
              std::size_t k = out.ax2(a, g, step.formula);
              std::size_t l = out.modus_ponens(k, image[mp.major]);
              return out.modus_ponens(l, image[mp.minor]);
            },
        },
        step.justification);
  }
  return out.take();
}

Proof discharge_position(const Proof& d, std::size_t index) {
  std::vector<bool> flags(d.hypotheses.size(), false);
  flags.at(index) = true;
  return discharge_flagged(d, d.hypotheses[index], flags);
}

// Discharges the hypotheses of d one position at a time, last first, so
// that coincident hypothesis formulas end up under separate arrows.
Proof discharge_all(Proof d) {
  while (!d.hypotheses.empty()) d = discharge_position(d, d.hypotheses.size() - 1);
  return d;
}

}  // namespace

Proof prove_identity(const Formula& a) {
  Formula aa = Formula::implies(a, a);
  ProofBuilder b({});
  std::size_t s1 = b.ax1(a, aa);         // a -> ((a -> a) -> a)
  std::size_t s2 = b.ax2(a, aa, a);      // (a -> ((a->a) -> a)) -> ((a -> (a->a)) -> (a -> a))
  std::size_t s3 = b.modus_ponens(s2, s1);
  std::size_t s4 = b.ax1(a, a);          // a -> (a -> a)
  b.modus_ponens(s3, s4);                // a -> a
  return b.take();
}

Proof deduction_transform(const Derivation& d, const Formula& a) {
  std::vector<bool> flags(d.hypotheses.size(), false);
  bool any = false;
  for (std::size_t h = 0; h < d.hypotheses.size(); ++h)
    if (d.hypotheses[h] == a) flags[h] = any = true;
  if (!any) throw Error("deduction transform: '" + print(a) + "' is not a hypothesis");
  return discharge_flagged(d, a, flags);
}

Proof discharge_extension_axiom(const Proof& p, const Extension& ext, std::size_t index) {
  if (index >= ext.added_axioms.size())
    throw Error("discharge: extension axiom index out of range");
  const Formula& removed = ext.added_axioms[index];

  Proof shifted = p;
  const std::size_t h = shifted.hypotheses.size();
  shifted.hypotheses.push_back(removed);
  for (ProofStep& step : shifted.steps) {
    if (auto* e = std::get_if<ExtensionAxiom>(&step.justification)) {
      if (e->index == index)
        step.justification = Hypothesis{h};
      else if (e->index > index)
        --e->index;
    }
  }
  return discharge_position(shifted, h);
}

// --- the eight laws --------------------------------------------------------

const Theorem1Part& theorem1_part(int index) {
  static const Theorem1Part parts[kTheorem1PartCount] = {
      // index, uses_a, uses_b, uses_c, uses_q, needs_peirce
      {1, true, true, true, false, false},
      {2, true, true, false, true, false},
      {3, true, false, false, true, false},
      {4, true, false, false, true, false},
      {5, true, true, false, true, false},
      {6, true, true, false, true, false},
      {7, true, true, false, true, true},
      {8, true, true, false, true, false},
  };
  if (index < 1 || index > kTheorem1PartCount)
    throw Error("theorem1 part index must be 1.." + std::to_string(kTheorem1PartCount));
  return parts[index - 1];
}

Formula theorem1_statement(int index, const Theorem1Args& args) {
  theorem1_part(index);  // range check
  const Formula &q = args.q, &a = args.a, &b = args.b, &c = args.c;
  auto Q = [&](const Formula& x) { return q_wrap(q, x); };
  auto imp = [](const Formula& x, const Formula& y) { return Formula::implies(x, y); };
  Formula ab = imp(a, b);
  switch (index) {
    case 1: return imp(ab, imp(imp(b, c), imp(a, c)));
    case 2: return imp(ab, imp(Q(b), Q(a)));
    case 3: return imp(a, Q(Q(a)));
    case 4: return imp(Q(Q(Q(a))), Q(a));
    case 5: return imp(Q(Q(b)), Q(Q(ab)));
    case 6: return imp(Q(Q(a)), imp(Q(b), Q(ab)));
    case 7: return imp(Q(a), Q(Q(ab)));
    default: return imp(imp(Q(a), b), imp(imp(Q(Q(a)), b), Q(Q(b))));
  }
}

namespace {

Proof derive_part(int index, const Theorem1Args& args) {
  const Formula &q = args.q, &a = args.a, &b = args.b, &c = args.c;
  auto Q = [&](const Formula& x) { return q_wrap(q, x); };
  auto imp = [](const Formula& x, const Formula& y) { return Formula::implies(x, y); };
  Formula ab = imp(a, b);

  switch (index) {
    case 1: {  // from a->b, b->c, a: chain two MP, then discharge
      ProofBuilder d({ab, imp(b, c), a});
      std::size_t sa = d.hypothesis(2);
      std::size_t h0 = d.hypothesis(0);
      std::size_t sb = d.modus_ponens(h0, sa);
      std::size_t h1 = d.hypothesis(1);
      d.modus_ponens(h1, sb);
      return discharge_all(d.take());
    }
    case 2: {  // from a->b, Qb, a: b then q
      ProofBuilder d({ab, Q(b), a});
      std::size_t sa = d.hypothesis(2);
      std::size_t h0 = d.hypothesis(0);
      std::size_t sb = d.modus_ponens(h0, sa);
      std::size_t h1 = d.hypothesis(1);
      d.modus_ponens(h1, sb);
      return discharge_all(d.take());
    }
    case 3: {  // from a, Qa: q
      ProofBuilder d({a, Q(a)});
      std::size_t sa = d.hypothesis(0);
      std::size_t h1 = d.hypothesis(1);
      d.modus_ponens(h1, sa);
      return discharge_all(d.take());
    }
    case 4: {  // from QQQa, a: part 3 gives QQa, then q
      ProofBuilder d({Q(Q(Q(a))), a});
      std::size_t p3 = d.include(derive_part(3, args));
      std::size_t qq = d.modus_ponens(p3, d.hypothesis(1));
      d.modus_ponens(d.hypothesis(0), qq);
      return discharge_all(d.take());
    }
    case 5: {  // from QQb, Q(a->b): part 2 at (b, a->b) + AX1 give Qb, then q
      Theorem1Args inner{q, b, ab, c};
      ProofBuilder d({Q(Q(b)), Q(ab)});
      std::size_t p2 = d.include(derive_part(2, inner));  // (b->(a->b)) -> (Q(a->b) -> Qb)
      std::size_t weak = d.ax1(b, a);                     // b -> (a -> b)
      std::size_t to_qb = d.modus_ponens(p2, weak);
      std::size_t qb = d.modus_ponens(to_qb, d.hypothesis(1));
      d.modus_ponens(d.hypothesis(0), qb);
      return discharge_all(d.take());
    }
    case 6: {  // from QQa, Qb, a->b: part 1 at (a,b,q) turns a->b into Qb->Qa
      Theorem1Args inner{args.q, a, b, q};
      ProofBuilder d({Q(Q(a)), Q(b), ab});
      std::size_t p1 = d.include(derive_part(1, inner));  // (a->b) -> ((b->q) -> (a->q))
      std::size_t s = d.modus_ponens(p1, d.hypothesis(2));
      std::size_t qa = d.modus_ponens(s, d.hypothesis(1));
      d.modus_ponens(d.hypothesis(0), qa);
      return discharge_all(d.take());
    }
    case 7: {  // the Peirce part, in three stages
      // stage 1: Qa, Q(a->b), q->b, a ⊢ b; discharge a.
      ProofBuilder d1({Q(a), Q(ab), imp(q, b), a});
      std::size_t sa = d1.hypothesis(3);
      std::size_t h0 = d1.hypothesis(0);
      std::size_t sq = d1.modus_ponens(h0, sa);
      std::size_t h2 = d1.hypothesis(2);
      d1.modus_ponens(h2, sq);
      Proof p1 = discharge_position(d1.take(), 3);  // ⊢ a -> b

      // stage 2: with a->b in hand, Q(a->b) yields q; discharge q->b.
      ProofBuilder d2({Q(a), Q(ab), imp(q, b)});
      std::size_t c1 = d2.include(p1, {0, 1, 2});
      d2.modus_ponens(d2.hypothesis(1), c1);
      Proof p2 = discharge_position(d2.take(), 2);  // ⊢ (q -> b) -> q

      // stage 3: Peirce instance ((q->b)->q)->q closes the loop.
      ProofBuilder d3({Q(a), Q(ab)});
      std::size_t peirce = d3.ax3(q, b);
      std::size_t c2 = d3.include(p2, {0, 1});
      d3.modus_ponens(peirce, c2);
      return discharge_all(d3.take());
    }
    default: {  // 8: from Qa->b, QQa->b, Qb: part 1 at (Qa, b, q) gives Qb->QQa
      Theorem1Args inner{args.q, Q(a), b, q};
      ProofBuilder d({imp(Q(a), b), imp(Q(Q(a)), b), Q(b)});
      std::size_t p1 = d.include(derive_part(1, inner));  // (Qa->b) -> ((b->q) -> (Qa->q))
      std::size_t s = d.modus_ponens(p1, d.hypothesis(0));
      std::size_t qb = d.hypothesis(2);
      std::size_t qqa = d.modus_ponens(s, qb);            // QQa
      std::size_t sb = d.modus_ponens(d.hypothesis(1), qqa);
      d.modus_ponens(qb, sb);                             // q
      return discharge_all(d.take());
    }
  }
}

}  // namespace

Proof derive_theorem1(int index, const Theorem1Args& args) {
  theorem1_part(index);  // range check
  Proof p = derive_part(index, args);
  Formula conclusion = check(p, Extension{});
  if (conclusion != theorem1_statement(index, args) || !p.hypotheses.empty())
    throw Error("theorem1 derivation does not match its statement");  // unreachable
  return p;
}

Proof inconsistency_from_witness(const Extension& ext, const Formula& q,
                                 const Proof& proof_a, const Proof& proof_qa) {
  if (!proof_a.hypotheses.empty() || !proof_qa.hypotheses.empty())
    throw Error("inconsistency witness proofs must be hypothesis-free");
  check(proof_a, ext);
  check(proof_qa, ext);
  const Formula& a = proof_a.conclusion();
  if (proof_qa.conclusion() != q_wrap(q, a))
    throw Error("conclusions are not related as A and QA");

  Theorem1Args inst;
  inst.q = q;
  inst.a = a;
  ProofBuilder b({});
  std::size_t sa = b.include(proof_a);
  std::size_t p3 = b.include(derive_theorem1(3, inst));  // A -> ((A -> q) -> q)
  std::size_t qqa = b.modus_ponens(p3, sa);
  std::size_t qa = b.include(proof_qa);
  b.modus_ponens(qqa, qa);
  Proof result = b.take();
  check(result, ext);
  return result;
}

}  // namespace ipc
