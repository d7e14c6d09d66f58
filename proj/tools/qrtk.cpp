// qrtk -- generate, transform, prove, translate, and check QBF formulas and
// resolution-style proofs. All commands read stdin and write stdout unless
// file flags say otherwise, so they compose in pipelines.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qrtk/bce.hpp"
#include "qrtk/families.hpp"
#include "qrtk/negation.hpp"
#include "qrtk/oracle.hpp"
#include "qrtk/qdimacs.hpp"
#include "qrtk/qres.hpp"
#include "qrtk/random_qcnf.hpp"
#include "qrtk/termres.hpp"
#include "qrtk/traces.hpp"
#include "qrtk/translate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw qrtk::parse_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void emit(const std::string& path, const std::string& payload) {
  if (path.empty() || path == "-") {
    std::cout << payload;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw qrtk::parse_error("cannot write '" + path + "'");
  file << payload;
}

qrtk::Qcnf read_formula(const std::string& path) { return qrtk::parse_qdimacs(slurp(path)); }

struct CheckOptions {
  std::string formula;
  std::string proof;
  std::string mode = "q";
};

int run_check(const CheckOptions& opt) {
  qrtk::Qcnf f = read_formula(opt.formula);
  qrtk::ResolutionMode mode =
      opt.mode == "qu" ? qrtk::ResolutionMode::qu : qrtk::ResolutionMode::q;
  std::istringstream in(slurp(opt.proof));
  auto trace = qrtk::parse_trace(in);

  qrtk::CheckReport report;
  const char* closed_goal = nullptr;
  if (std::holds_alternative<qrtk::ClauseProof>(trace)) {
    report = qrtk::check_clause_proof(f, std::get<qrtk::ClauseProof>(trace), mode);
    closed_goal = "root clause is not empty";
  } else {
    report = qrtk::check_term_proof(f, std::get<qrtk::TermProof>(trace));
    closed_goal = "root term is not empty";
  }

  for (const auto& d : report.diagnostics)
    std::cerr << "node " << d.node << ": " << d.message << '\n';
  if (report.accepted()) {
    std::cout << "accepted, size=" << report.size() << ", leaves=" << report.leaves << '\n';
    return kExitOk;
  }
  if (report.valid) {
    std::cout << "valid but incomplete (" << closed_goal << "), size=" << report.size() << '\n';
  } else {
    std::cout << "rejected\n";
  }
  return kExitRejected;
}

int run(int argc, char** argv) {
  CLI::App app{"QBF resolution toolkit: formula families, negation, blocked clause "
               "elimination, a brute-force oracle, proof translation, and proof checking"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate formulas");
  gen->require_subcommand(1);
  int iff_n = 1;
  std::string gen_out;
  auto* gen_iff_cmd = gen->add_subcommand(
      "iff", "Equivalence family: forall x_i exists y_i with y_i forced equal to x_i");
  gen_iff_cmd->add_option("--n", iff_n, "Number of variable pairs")->required();
  gen_iff_cmd->add_option("-o,--out", gen_out, "Output file (default stdout)");
  gen_iff_cmd->callback([&] {
    std::string payload = "c generated-by qrtk gen iff --n " + std::to_string(iff_n) +
                          "; vars x_i=2i-1 (forall), y_i=2i (exists); clauses (-x_i y_i)(x_i -y_i)\n";
    emit(gen_out, payload + qrtk::serialize_qdimacs(qrtk::gen_iff(iff_n)));
  });

  std::string defs_circuit;
  auto* gen_defs_cmd =
      gen->add_subcommand("defs", "NAND-circuit definition formula from a circuit file");
  gen_defs_cmd->add_option("--circuit", defs_circuit, "Circuit file")->required();
  gen_defs_cmd->add_option("-o,--out", gen_out, "Output file (default stdout)");
  gen_defs_cmd->callback([&] {
    std::istringstream in(slurp(defs_circuit));
    std::string payload =
        "c generated-by qrtk gen defs; per gate o=nand(a,b): clauses (-a -b -o)(a o)(b o)\n";
    emit(gen_out, payload + qrtk::serialize_qdimacs(qrtk::gen_definitions(qrtk::parse_circuit(in))));
  });

  std::uint64_t seed = 1;
  qrtk::RandomQcnfParams rnd;
  auto* gen_random_cmd = gen->add_subcommand(
      "random", "Seeded random QCNF (testing tool, not part of the studied families)");
  gen_random_cmd->add_option("--seed", seed, "Seed");
  gen_random_cmd->add_option("--max-vars", rnd.max_vars, "Maximum variable count");
  gen_random_cmd->add_option("--max-clauses", rnd.max_clauses, "Maximum clause count");
  gen_random_cmd->add_option("--max-width", rnd.max_clause_width, "Maximum clause width");
  gen_random_cmd->add_option("-o,--out", gen_out, "Output file (default stdout)");
  gen_random_cmd->callback([&] {
    std::string payload = "c generated-by qrtk gen random --seed " + std::to_string(seed) + "\n";
    emit(gen_out, payload + qrtk::serialize_qdimacs(qrtk::gen_random_qcnf(seed, rnd)));
  });

  // negate
  std::string in_path, out_path, map_path;
  auto* negate_cmd = app.add_subcommand(
      "negate", "Quantifier-inverting negation with per-clause indicator variables");
  negate_cmd->add_option("-i,--in", in_path, "Input QDIMACS (default stdin)");
  negate_cmd->add_option("-o,--out", out_path, "Output QDIMACS (default stdout)");
  negate_cmd->add_option("--map", map_path, "Sidecar file: '<clause index> <indicator var>'");
  negate_cmd->callback([&] {
    auto result = qrtk::negate(read_formula(in_path));
    emit(out_path, qrtk::serialize_qdimacs(result.negated));
    if (!map_path.empty()) {
      std::string map;
      for (std::size_t j = 0; j < result.indicators.size(); ++j)
        map += std::to_string(j + 1) + ' ' + std::to_string(result.indicators[j].id()) + '\n';
      emit(map_path, map);
    }
  });

  // bce
  std::string trace_path, order = "first";
  auto* bce_cmd = app.add_subcommand("bce", "Blocked clause elimination to fixpoint");
  bce_cmd->add_option("-i,--in", in_path, "Input QDIMACS (default stdin)");
  bce_cmd->add_option("-o,--out", out_path, "Residual QDIMACS (default stdout)");
  bce_cmd->add_option("--trace", trace_path, "Trace file: '<clause index> <blocking literal>'");
  bce_cmd->add_option("--order", order, "Scan direction: first|last")
      ->check(CLI::IsMember({"first", "last"}));
  bce_cmd->callback([&] {
    auto trace = qrtk::eliminate_blocked(read_formula(in_path), order == "last"
                                                                    ? qrtk::BceOrder::last
                                                                    : qrtk::BceOrder::first);
    emit(out_path, qrtk::serialize_qdimacs(trace.residual));
    if (!trace_path.empty()) emit(trace_path, qrtk::serialize_bce_trace(trace));
  });

  // eval
  int budget = 20;
  auto* eval_cmd = app.add_subcommand("eval", "Brute-force truth value");
  eval_cmd->add_option("-i,--in", in_path, "Input QDIMACS (default stdin)");
  eval_cmd->add_option("--budget", budget, "Variable budget");
  eval_cmd->callback([&] {
    bool value = qrtk::evaluate(read_formula(in_path), qrtk::EvalBudget{budget});
    std::cout << (value ? "true" : "false") << '\n';
  });

  // prove-term
  auto* prove_cmd =
      app.add_subcommand("prove-term", "Term-resolution proof of a true formula by expansion");
  prove_cmd->add_option("-i,--in", in_path, "Input QDIMACS (default stdin)");
  prove_cmd->add_option("-o,--out", out_path, "Output term trace (default stdout)");
  prove_cmd->add_option("--budget", budget, "Variable budget");
  bool proved = true;
  prove_cmd->callback([&] {
    qrtk::Qcnf f = read_formula(in_path);
    if (!qrtk::evaluate(f, qrtk::EvalBudget{budget})) {
      std::cerr << "formula is false; no term proof exists\n";
      proved = false;
      return;
    }
    auto proof = qrtk::prove_by_expansion(f, qrtk::EvalBudget{budget});
    emit(out_path, qrtk::serialize_term_trace(proof, f.num_vars()));
  });

  // translate
  std::string formula_path, proof_path, report_path;
  auto* translate_cmd = app.add_subcommand(
      "translate", "Compile a term proof of the formula into a refutation of its negation");
  translate_cmd->add_option("--formula", formula_path, "The proved formula (QDIMACS)")->required();
  translate_cmd->add_option("--proof", proof_path, "Term trace (default stdin)");
  translate_cmd->add_option("-o,--out", out_path, "Output clause trace (default stdout)");
  translate_cmd->add_option("--report", report_path, "Report file, key=value lines");
  translate_cmd->callback([&] {
    qrtk::Qcnf f = read_formula(formula_path);
    std::istringstream in(slurp(proof_path));
    auto proof = qrtk::parse_term_trace(in);
    auto neg = qrtk::negate(f);
    auto result = qrtk::translate(f, proof, neg);
    emit(out_path, qrtk::serialize_clause_trace(result.proof, neg.negated.num_vars()));
    if (!report_path.empty())
      emit(report_path, qrtk::serialize_translation_report(result.report));
  });

  // emit
  auto* emit_cmd = app.add_subcommand("emit", "Emit the built-in proofs for the families");
  emit_cmd->require_subcommand(1);
  int fig1_n = 1;
  auto* fig1_cmd = emit_cmd->add_subcommand(
      "fig1", "Linear refutation of the negated equivalence family (size 7n)");
  fig1_cmd->add_option("--n", fig1_n, "Number of variable pairs")->required();
  fig1_cmd->add_option("-o,--out", out_path, "Output clause trace (default stdout)");
  fig1_cmd->callback([&] {
    auto proof = qrtk::emit_linear_refutation(fig1_n);
    emit(out_path, qrtk::serialize_clause_trace(proof, 4 * fig1_n));
  });

  std::string fig2_circuit;
  auto* fig2_cmd = emit_cmd->add_subcommand(
      "fig2", "QU-resolution refutation of a negated definition formula");
  fig2_cmd->add_option("--circuit", fig2_circuit, "Circuit file")->required();
  fig2_cmd->add_option("-o,--out", out_path, "Output clause trace (default stdout)");
  fig2_cmd->callback([&] {
    std::istringstream in(slurp(fig2_circuit));
    auto circuit = qrtk::parse_circuit(in);
    auto proof = qrtk::emit_definition_refutation(circuit);
    int vars = static_cast<int>(circuit.inputs.size() + 4 * circuit.gates.size());
    emit(out_path, qrtk::serialize_clause_trace(proof, vars));
  });

  // check
  CheckOptions check_opt;
  bool rejected = false;
  auto* check_cmd = app.add_subcommand("check", "Check a clause or term trace against a formula");
  check_cmd->add_option("--formula", check_opt.formula, "Formula (QDIMACS)")->required();
  check_cmd->add_option("--proof", check_opt.proof, "Trace file (default stdin)");
  check_cmd->add_option("--mode", check_opt.mode, "Resolution mode for clause traces: q|qu")
      ->check(CLI::IsMember({"q", "qu"}));
  check_cmd->callback([&] { rejected = run_check(check_opt) != kExitOk; });

  // analyze
  bool min_universal = false;
  int cap = 14;
  auto* analyze_cmd = app.add_subcommand("analyze", "Model-based lower-bound analysis");
  analyze_cmd->add_flag("--min-universal", min_universal,
                        "Minimum universal literal count over all models of the matrix");
  analyze_cmd->add_option("-i,--in", in_path, "Input QDIMACS (default stdin)");
  analyze_cmd->add_option("--cap", cap, "Enumeration budget (variables)");
  analyze_cmd->callback([&] {
    if (!min_universal) throw CLI::ValidationError("analyze", "pass --min-universal");
    auto k = qrtk::min_universal_literals_over_models(read_formula(in_path), cap);
    if (!k) {
      std::cout << "min_universal=infinity\nleaf_lower_bound=infinity\n";
      return;
    }
    std::cout << "min_universal=" << *k << '\n'
              << "leaf_lower_bound=" << (std::uint64_t{1} << *k) << '\n';
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!proved || rejected) return kExitRejected;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qrtk::parse_error& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qrtk::budget_error& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const qrtk::rule_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
