#include <doctest.h>

#include <algorithm>

#include "qrtk/families.hpp"
#include "qrtk/negation.hpp"
#include "qrtk/oracle.hpp"
#include "qrtk/qdimacs.hpp"
#include "qrtk/random_qcnf.hpp"
#include "qrtk/termres.hpp"

using namespace qrtk;

namespace {

Literal lit(int code) { return Literal::from_dimacs(code); }

Term term(std::vector<int> codes) {
  std::vector<Literal> lits;
  for (int c : codes) lits.push_back(lit(c));
  return Term::of(std::move(lits));
}

}  // namespace

TEST_CASE("evaluate by expansion") {
  CHECK(evaluate(gen_iff(3)));
  CHECK(!evaluate(negate(gen_iff(2)).negated));
  CHECK(!evaluate(parse_qdimacs("p cnf 1 1\na 1 0\n1 0\n")));
  CHECK(evaluate(parse_qdimacs("p cnf 0 0\n")));
  CHECK(!evaluate(parse_qdimacs("p cnf 1 1\ne 1 0\n0\n")));  // empty clause
  CHECK_THROWS_AS(evaluate(gen_iff(11)), budget_error);
}

TEST_CASE("the five-node proof of the smallest equivalence instance") {
  TermProof p = prove_by_expansion(gen_iff(1));
  REQUIRE(p.nodes.size() == 5);
  CHECK(p.nodes[0].kind == StepKind::leaf);
  CHECK(p.nodes[0].term == term({1, 2}));
  CHECK(p.nodes[1].kind == StepKind::reduction);
  CHECK(p.nodes[1].term == term({1}));
  CHECK(p.nodes[2].kind == StepKind::leaf);
  CHECK(p.nodes[2].term == term({-1, -2}));
  CHECK(p.nodes[3].kind == StepKind::reduction);
  CHECK(p.nodes[3].term == term({-1}));
  CHECK(p.nodes[4].kind == StepKind::resolution);
  CHECK(p.nodes[4].pivot == Variable(1));
  CHECK(p.nodes[4].term.empty());
}

TEST_CASE("expansion proofs have one leaf per universal branch") {
  for (int n = 1; n <= 4; ++n) {
    TermProof p = prove_by_expansion(gen_iff(n));
    CheckReport report = check_term_proof(gen_iff(n), p);
    CHECK(report.accepted());
    CHECK(report.leaves == (std::size_t{1} << n));
  }
}

TEST_CASE("formulas without universals give single-leaf proofs") {
  Qcnf f = parse_qdimacs("p cnf 2 2\ne 1 2 0\n1 2 0\n-1 2 0\n");
  TermProof p = prove_by_expansion(f);
  CheckReport report = check_term_proof(f, p);
  CHECK(report.accepted());
  CHECK(report.leaves == 1);
  CHECK(report.resolutions == 0);
  CHECK(p.root().term.empty());
}

TEST_CASE("expansion follows the branch policy") {
  Qcnf f = parse_qdimacs("p cnf 2 2\ne 1 2 0\n1 2 0\n-1 2 0\n");
  TermProof zero_first = prove_by_expansion(f);
  CHECK(zero_first.nodes[0].term == term({-1, 2}));  // 1=0 already satisfies clause 2
  TermProof one_first = prove_by_expansion(f, {}, [](Variable) { return true; });
  CHECK(one_first.nodes[0].term == term({1, 2}));
}

TEST_CASE("proving a false formula fails") {
  CHECK_THROWS_AS(prove_by_expansion(parse_qdimacs("p cnf 1 1\na 1 0\n1 0\n")), rule_error);
}

TEST_CASE("model enumeration") {
  Qcnf f = gen_iff(1);
  std::vector<Term> models = enumerate_models(f);
  CHECK(std::find(models.begin(), models.end(), term({1, 2})) != models.end());
  CHECK(std::find(models.begin(), models.end(), term({-1, -2})) != models.end());
  CHECK(std::find(models.begin(), models.end(), term({1, -2})) == models.end());

  // subset-minimal models are exactly the two equal-polarity pairs
  auto minimal = [&](const Term& t) {
    for (const Term& other : models) {
      if (other.size() >= t.size() || other == t) continue;
      bool subset = std::all_of(other.begin(), other.end(),
                                [&](Literal l) { return t.contains(l); });
      if (subset) return false;
    }
    return true;
  };
  std::vector<Term> minimal_models;
  for (const Term& m : models)
    if (minimal(m)) minimal_models.push_back(m);
  REQUIRE(minimal_models.size() == 2);
  CHECK(std::find(minimal_models.begin(), minimal_models.end(), term({1, 2})) !=
        minimal_models.end());
  CHECK(std::find(minimal_models.begin(), minimal_models.end(), term({-1, -2})) !=
        minimal_models.end());
}

TEST_CASE("empty matrix admits the empty model, contradictory units none") {
  std::vector<Term> empty_models = enumerate_models(parse_qdimacs("p cnf 1 0\ne 1 0\n"));
  CHECK(std::find(empty_models.begin(), empty_models.end(), Term()) != empty_models.end());
  CHECK(enumerate_models(parse_qdimacs("p cnf 1 2\ne 1 0\n1 0\n-1 0\n")).empty());
}

TEST_CASE("proof leaves are models the enumerator also finds") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Qcnf f = gen_random_qcnf(seed, {.max_vars = 6, .max_clauses = 5});
    if (!evaluate(f)) continue;
    TermProof p = prove_by_expansion(f);
    std::vector<Term> models = enumerate_models(f);
    for (const auto& node : p.nodes)
      if (node.kind == StepKind::leaf)
        CHECK(std::find(models.begin(), models.end(), node.term) != models.end());
  }
}

TEST_CASE("evaluate agrees with provability") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Qcnf f = gen_random_qcnf(seed, {.max_vars = 7, .max_clauses = 6});
    bool value = evaluate(f);
    if (value) {
      CHECK(check_term_proof(f, prove_by_expansion(f)).accepted());
    } else {
      CHECK_THROWS_AS(prove_by_expansion(f), rule_error);
    }
  }
}
