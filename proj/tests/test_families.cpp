#include <doctest.h>

#include <algorithm>

#include "qrtk/families.hpp"
#include "qrtk/oracle.hpp"
#include "qrtk/qdimacs.hpp"

using namespace qrtk;

namespace {

Literal lit(int code) { return Literal::from_dimacs(code); }

Clause clause(std::vector<int> codes) {
  std::vector<Literal> lits;
  for (int c : codes) lits.push_back(lit(c));
  return Clause::of(std::move(lits));
}

Circuit three_gate_circuit() {
  Circuit c;
  c.inputs = {{Variable(1), Quantifier::exists},
              {Variable(2), Quantifier::forall},
              {Variable(3), Quantifier::exists}};
  c.gates = {{Variable(4), Variable(1), Variable(2)},
             {Variable(5), Variable(2), Variable(3)},
             {Variable(6), Variable(4), Variable(5)}};
  return c;
}

bool has_clause(const ClauseProof& p, const Clause& c) {
  return std::any_of(p.nodes.begin(), p.nodes.end(),
                     [&](const ClauseProofNode& n) { return n.clause == c; });
}

}  // namespace

TEST_CASE("gen_iff matches the documented numbering") {
  CHECK(gen_iff(1) == parse_qdimacs("p cnf 2 2\na 1 0\ne 2 0\n-1 2 0\n1 -2 0\n"));
  Qcnf f = gen_iff(3);
  CHECK(f.num_vars() == 6);
  CHECK(f.matrix.size() == 6);
  CHECK(f.prefix.blocks().size() == 6);
  CHECK(evaluate(f));
  CHECK_THROWS_AS(gen_iff(0), rule_error);
}

TEST_CASE("the linear refutation has size exactly 7n") {
  for (int n : {1, 2, 3, 7, 20}) {
    Qcnf neg = negate(gen_iff(n)).negated;
    ClauseProof p = emit_linear_refutation(n);
    CheckReport report = check_clause_proof(neg, p, ResolutionMode::q);
    CHECK(report.accepted());
    CHECK(report.size() == static_cast<std::size_t>(7 * n));
    CHECK(report.resolutions == static_cast<std::size_t>(5 * n));
    CHECK(report.reductions == static_cast<std::size_t>(2 * n));
  }
}

TEST_CASE("the refutation passes through the unreduced clause -x1 -y1") {
  ClauseProof p = emit_linear_refutation(1);
  CHECK(has_clause(p, clause({-1, -2})));
  CHECK(has_clause(p, clause({-2, -4})));
  CHECK(has_clause(p, Clause()));
}

TEST_CASE("refuted negations are semantically false") {
  for (int n = 1; n <= 4; ++n) {
    Qcnf neg = negate(gen_iff(n)).negated;
    REQUIRE(check_clause_proof(neg, emit_linear_refutation(n), ResolutionMode::q).accepted());
    CHECK(!evaluate(neg));
  }
}

TEST_CASE("definition formula of the three-gate circuit") {
  Qcnf f = gen_definitions(three_gate_circuit());
  CHECK(f.matrix.size() == 9);
  REQUIRE(f.prefix.blocks().size() == 3);
  CHECK(f.prefix.blocks()[0].vars == std::vector<Variable>{Variable(1)});
  CHECK(f.prefix.blocks()[1].vars == std::vector<Variable>{Variable(2)});
  CHECK(f.prefix.blocks()[2].vars ==
        std::vector<Variable>{Variable(3), Variable(4), Variable(5), Variable(6)});
  CHECK(f.matrix[0] == clause({-1, -2, -4}));
  CHECK(f.matrix[1] == clause({1, 4}));
  CHECK(f.matrix[2] == clause({2, 4}));
  CHECK(evaluate(f));
}

TEST_CASE("a gate fed twice by the same signal collapses its first clause") {
  Circuit c;
  c.inputs = {{Variable(1), Quantifier::forall}};
  c.gates = {{Variable(2), Variable(1), Variable(1)}};
  Qcnf f = gen_definitions(c);
  REQUIRE(f.matrix.size() == 3);
  CHECK(f.matrix[0] == clause({-1, -2}));
  CHECK(f.matrix[1] == clause({1, 2}));
  CHECK(f.matrix[2] == clause({1, 2}));
  REQUIRE(f.prefix.blocks().size() == 2);
  CHECK(f.prefix.blocks()[1].quant == Quantifier::exists);
  CHECK(evaluate(f));
}

TEST_CASE("definition formulas are true for chains") {
  for (int g = 1; g <= 6; ++g) CHECK(evaluate(gen_definitions(nand_chain(g))));
}

TEST_CASE("the definition refutation needs universal pivots") {
  Circuit c = three_gate_circuit();
  Qcnf neg = negate(gen_definitions(c)).negated;
  ClauseProof p = emit_definition_refutation(c);

  CheckReport qu = check_clause_proof(neg, p, ResolutionMode::qu);
  CHECK(qu.accepted());

  // the fragment resolving the innermost gate: keep both intermediate clauses
  CHECK(has_clause(p, clause({-4, -5, -7, -8, -9, -10, -11, -12})));  // ... -o1 -o2
  CHECK(has_clause(p, clause({5, -7, -8, -9, -10, -11, -12})));       // ... o2

  CheckReport q = check_clause_proof(neg, p, ResolutionMode::q);
  CHECK(!q.valid);
  REQUIRE(!q.diagnostics.empty());
  CHECK(q.diagnostics[0].message.find("universal pivot") != std::string::npos);
  // the offending pivot is a gate output
  bool output_pivot = q.diagnostics[0].message.find("universal pivot 5") != std::string::npos ||
                      q.diagnostics[0].message.find("universal pivot 4") != std::string::npos ||
                      q.diagnostics[0].message.find("universal pivot 6") != std::string::npos;
  CHECK(output_pivot);
}

TEST_CASE("chain refutations stay linear in the gate count") {
  for (int g = 1; g <= 20; ++g) {
    Circuit c = nand_chain(g);
    Qcnf neg = negate(gen_definitions(c)).negated;
    ClauseProof p = emit_definition_refutation(c);
    CheckReport report = check_clause_proof(neg, p, ResolutionMode::qu);
    CHECK(report.accepted());
    CHECK(report.size() <= static_cast<std::size_t>(25 * g));
  }
}

TEST_CASE("circuit parsing") {
  Circuit c = parse_circuit("c three gates\n"
                            "input 1 e\n"
                            "input 2 a\n"
                            "input 3 e\n"
                            "gate 4 1 2\n"
                            "gate 5 2 3\n"
                            "gate 6 4 5\n");
  CHECK(c == three_gate_circuit());

  CHECK_THROWS_AS(parse_circuit("input 1 e\ngate 2 1 3\n"), parse_error);  // undefined signal
  CHECK_THROWS_AS(parse_circuit("input 1 e\ninput 1 a\n"), parse_error);   // duplicate id
  CHECK_THROWS_AS(parse_circuit("input 1 e\ngate 3 1 1\n"), parse_error);  // ids not dense
  CHECK_THROWS_AS(parse_circuit("gate 2 1 1\ninput 1 e\n"), parse_error);  // inputs after gates
  CHECK_THROWS_AS(parse_circuit("input 1 x\n"), parse_error);              // bad quantifier
  CHECK_THROWS_AS(emit_definition_refutation(Circuit{{{Variable(1), Quantifier::exists}}, {}}),
                  rule_error);
}
