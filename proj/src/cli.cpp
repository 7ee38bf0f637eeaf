#include "ipc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ipc/error.hpp"
#include "ipc/lindenbaum.hpp"
#include "ipc/meta.hpp"
#include "ipc/proof_io.hpp"
#include "ipc/scheme.hpp"
#include "ipc/search.hpp"
#include "ipc/semantics.hpp"

namespace ipc::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

void emit_text(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
}

std::string assignment_text(const Valuation& v) {
  std::string line;
  for (const auto& [name, value] : v) {
    if (!line.empty()) line += ' ';
    line += name + "=" + (value ? "1" : "0");
  }
  return line;
}

std::vector<Formula> parse_formula_list(const std::string& text) {
  std::vector<Formula> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t semi = text.find(';', start);
    std::string piece =
        text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    out.push_back(parse(piece));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

std::size_t count_ax3_steps(const Proof& proof) {
  std::size_t n = 0;
  for (const ProofStep& step : proof.steps)
    if (auto* ax = std::get_if<AxiomInstance>(&step.justification))
      if (ax->scheme == SchemeId::AX3) ++n;
  return n;
}

int parse_theorem1_name(const std::string& name) {
  if (name.rfind("thm1.", 0) == 0 && name.size() == 6 && name[5] >= '1' && name[5] <= '8')
    return name[5] - '0';
  throw Error("unknown derivation name '" + name + "' (expected thm1.1 .. thm1.8)");
}

void emit_run_records(const CompletionTrace& trace, const FormulaValuation& valuation,
                      const OracleMode& oracle, const std::string& trace_path,
                      std::ostream& out) {
  out << "q: " << trace.q << "\n";
  std::string vars;
  for (const std::string& name : trace.universe.variables) {
    if (!vars.empty()) vars += ',';
    vars += name;
  }
  out << "universe: vars=" << vars << " bound=" << trace.universe.size_bound
      << " size=" << trace.universe.formulas.size() << "\n";
  out << "oracle: " << to_string(oracle) << "\n";

  std::string records;
  for (const CompletionStep& step : trace.steps)
    records += "trace: " + std::to_string(step.index) + " | " + print(step.formula) +
               " | qq=" + (step.qq_is_theorem ? "1" : "0") +
               " | added=" + (step.added ? "1" : "0") + "\n";
  if (trace_path.empty())
    out << records;
  else
    write_file(trace_path, records);

  for (std::size_t i = trace.initial_extension.added_axioms.size();
       i < trace.final_extension.added_axioms.size(); ++i)
    out << "added: " << trace.final_extension.added_axioms[i] << "\n";
  for (const auto& [f, value] : valuation.values())
    out << "value: " << f << " = " << (value ? "1" : "0") << "\n";
  out << "claim-violations: " << verify_valuation_claim(valuation).violations.size()
      << "\n";
  out << "assignment: " << assignment_text(valuation.variable_assignment()) << "\n";
}

// --- selftest ---------------------------------------------------------------

int selftest(std::ostream& out) {
  struct Check {
    std::string name;
    std::function<void()> body;
  };
  auto expect = [](bool condition, const std::string& what) {
    if (!condition) throw Error(what);
  };

  std::vector<Check> checks;
  for (int part = 1; part <= kTheorem1PartCount; ++part) {
    checks.push_back({"derive thm1." + std::to_string(part), [part, expect] {
                        Proof p = derive_theorem1(part);
                        Formula conclusion = check(p, Extension{});
                        expect(conclusion == theorem1_statement(part),
                               "conclusion differs from the statement");
                        std::size_t ax3 = count_ax3_steps(p);
                        expect(theorem1_part(part).needs_peirce ? ax3 >= 1 : ax3 == 0,
                               "unexpected AX3 usage");
                        expect(is_tautology(conclusion).tautology,
                               "conclusion is not a tautology");
                      }});
  }
  checks.push_back({"proof file round-trip", [expect] {
                      ProofFile pf{derive_theorem1(7), Extension{}};
                      std::string text = write_proof(pf.proof, pf.extension);
                      ProofFile back = read_proof(text);
                      expect(back == pf, "parsed proof differs");
                      expect(write_proof(back.proof, back.extension) == text,
                             "re-emitted text differs");
                    }});
  checks.push_back({"deduction transform", [expect] {
                      Proof d;
                      d.hypotheses = {parse("p"), parse("p -> q")};
                      d.steps = {{parse("p -> q"), Hypothesis{1}},
                                 {parse("p"), Hypothesis{0}},
                                 {parse("q"), ModusPonens{0, 1}}};
                      Proof t = deduction_transform(d, parse("p"));
                      expect(check(t, Extension{}) == parse("p -> q"),
                             "wrong transformed conclusion");
                      expect(t.hypotheses == std::vector<Formula>{parse("p -> q")},
                             "wrong remaining hypotheses");
                    }});
  checks.push_back({"completion over p -> q", [expect] {
                      Formula q = parse("p -> q");
                      Universe u = enumerate({"p", "q"}, 2);
                      CompletionTrace trace =
                          complete(Extension{}, q, u, OracleMode::semantic());
                      FormulaValuation v = extract_valuation(trace, OracleMode::semantic());
                      expect(verify_valuation_claim(v).ok(), "claim violations");
                      expect(v.value_of(q) == std::optional<bool>(false),
                             "target not refuted");
                    }});
  checks.push_back({"countermodel for p", [expect] {
                      Valuation v = countermodel(parse("p"), 1);
                      expect(v == Valuation{{"p", false}}, "expected p=0");
                    }});
  checks.push_back({"tautology refusal", [expect] {
                      try {
                        countermodel(parse("((p -> q) -> p) -> p"), 4);
                      } catch (const TautologyError&) {
                        return;
                      }
                      expect(false, "tautology was not refused");
                    }});
  checks.push_back({"bounded proof search", [expect] {
                      auto direct = search_proof(Extension{}, parse("p -> (q -> p)"), 1);
                      expect(direct.has_value(), "missed an axiom instance");
                      Extension two{{parse("p"), parse("p -> q")}};
                      auto chained = search_proof(two, parse("q"), 2);
                      expect(chained.has_value(), "missed a two-step consequence");
                      expect(!search_proof(Extension{}, parse("p"), 3).has_value(),
                             "proved a non-theorem");
                    }});
  checks.push_back({"oracle agreement on q -> q", [expect] {
                      Formula f = parse("q -> q");
                      expect(theoremhood_in(Extension{}, f, OracleMode::semantic()),
                             "semantic oracle rejects q -> q");
                      expect(theoremhood_in(Extension{}, f, OracleMode::search(2)),
                             "search oracle rejects q -> q");
                    }});

  int failures = 0;
  for (const Check& c : checks) {
    out << "selftest: " << c.name << " ... ";
    try {
      c.body();
      out << "ok\n";
    } catch (const std::exception& e) {
      ++failures;
      out << "FAIL: " << e.what() << "\n";
    }
  }
  out << "selftest: " << checks.size() << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"proof toolkit for the implicational propositional calculus"};
  app.name("ipc");
  app.require_subcommand(1);

  std::string formula_text, proof_path, discharge_text, out_path, derive_name;
  std::string q_text, vars_csv, oracle_text = "semantic", ext_text, trace_path;
  std::string arg_q = "q", arg_a = "p", arg_b = "r", arg_c = "s";
  std::optional<std::size_t> bound;

  CLI::App* taut = app.add_subcommand("taut", "decide a formula by truth table");
  taut->add_option("formula", formula_text, "formula in the arrow grammar")->required();

  CLI::App* chk = app.add_subcommand("check", "verify a proof file");
  chk->add_option("prooffile", proof_path, "path to a proof file")->required();

  CLI::App* dt = app.add_subcommand("dt", "discharge a hypothesis of a proof file");
  dt->add_option("prooffile", proof_path, "path to a proof file")->required();
  dt->add_option("--discharge", discharge_text, "hypothesis formula to discharge")
      ->required();
  dt->add_option("-o,--output", out_path, "write the transformed proof here");

  CLI::App* derive = app.add_subcommand("derive", "emit a library derivation");
  derive->add_option("name", derive_name, "derivation name: thm1.1 .. thm1.8")->required();
  derive->add_option("--q", arg_q, "formula for q");
  derive->add_option("--a", arg_a, "formula for a");
  derive->add_option("--b", arg_b, "formula for b");
  derive->add_option("--c", arg_c, "formula for c");
  derive->add_option("-o,--output", out_path, "write the proof here");

  CLI::App* comp = app.add_subcommand("complete", "run the completion procedure");
  comp->add_option("--q", q_text, "the formula q to stay consistent with")->required();
  comp->add_option("--vars", vars_csv, "universe variables (comma-separated)");
  comp->add_option("--bound", bound, "universe size bound");
  comp->add_option("--oracle", oracle_text, "semantic or search:<depth>");
  comp->add_option("--ext", ext_text, "starting added axioms (semicolon-separated)");
  comp->add_option("--trace", trace_path, "write trace records to this file");

  CLI::App* cm = app.add_subcommand("countermodel", "falsify a non-tautology");
  cm->add_option("--q", q_text, "the formula to falsify")->required();
  cm->add_option("--bound", bound, "starting universe size bound");
  cm->add_option("--oracle", oracle_text, "semantic or search:<depth>");
  cm->add_option("--trace", trace_path, "write trace records to this file");

  CLI::App* st = app.add_subcommand("selftest", "run the built-in checks");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*taut) {
      Formula f = parse(formula_text);
      Verdict verdict = is_tautology(f);
      out << (verdict.tautology ? "tautology" : "not-a-tautology") << "\n";
      out << "formula: " << f << "\n";
      if (verdict.countermodel)
        out << "countermodel: " << assignment_text(*verdict.countermodel) << "\n";
      return 0;
    }
    if (*chk) {
      ProofFile pf = read_proof(read_file(proof_path));
      Formula conclusion = check(pf.proof, pf.extension);
      out << "checked: ok\n";
      out << "conclusion: " << conclusion << "\n";
      out << "steps: " << pf.proof.steps.size() << "\n";
      out << "hypotheses: " << pf.proof.hypotheses.size() << "\n";
      out << "extension-axioms: " << pf.extension.added_axioms.size() << "\n";
      return 0;
    }
    if (*dt) {
      ProofFile pf = read_proof(read_file(proof_path));
      check(pf.proof, pf.extension);
      Proof transformed = deduction_transform(pf.proof, parse(discharge_text));
      check(transformed, pf.extension);
      emit_text(write_proof(transformed, pf.extension), out_path, out);
      return 0;
    }
    if (*derive) {
      int part = parse_theorem1_name(derive_name);
      Theorem1Args inst{parse(arg_q), parse(arg_a), parse(arg_b), parse(arg_c)};
      Proof proof = derive_theorem1(part, inst);
      emit_text(write_proof(proof, Extension{}), out_path, out);
      return 0;
    }
    if (*comp) {
      Formula q = parse(q_text);
      Extension ext;
      if (!ext_text.empty()) ext.added_axioms = parse_formula_list(ext_text);
      std::set<std::string> names = variables_of(q);
      if (!vars_csv.empty()) {
        names.clear();
        std::size_t start = 0;
        while (start <= vars_csv.size()) {
          std::size_t comma = vars_csv.find(',', start);
          names.insert(vars_csv.substr(
              start, comma == std::string::npos ? std::string::npos : comma - start));
          if (comma == std::string::npos) break;
          start = comma + 1;
        }
      }
      std::size_t size_bound = bound.value_or(std::max<std::size_t>(q.leaf_count(), 1));
      OracleMode oracle = oracle_mode_from_string(oracle_text);
      Universe universe = enumerate({names.begin(), names.end()}, size_bound);
      CompletionTrace trace = complete(ext, q, universe, oracle);
      FormulaValuation valuation = extract_valuation(trace, oracle);
      emit_run_records(trace, valuation, oracle, trace_path, out);
      return 0;
    }
    if (*cm) {
      Formula q = parse(q_text);
      CountermodelOptions options;
      options.oracle = oracle_mode_from_string(oracle_text);
      std::size_t size_bound = bound.value_or(std::max<std::size_t>(q.leaf_count(), 1));
      CountermodelRun run = countermodel_run(q, size_bound, options);
      emit_run_records(run.trace, run.valuation, options.oracle, trace_path, out);
      return 0;
    }
    if (*st) return selftest(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ipc::cli
