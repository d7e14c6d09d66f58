#include <doctest.h>

#include "qrtk/families.hpp"
#include "qrtk/qcnf.hpp"
#include "qrtk/random_qcnf.hpp"

using namespace qrtk;

namespace {

Literal lit(int code) { return Literal::from_dimacs(code); }

// Independent oracle: does every total extension of t satisfy the matrix?
bool all_extensions_satisfy(const Qcnf& f, const Term& t) {
  int n = f.num_vars();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Assignment sigma;
    bool compatible = true;
    for (int id = 1; id <= n; ++id) sigma.set(Variable(id), (mask >> (id - 1)) & 1);
    for (Literal l : t) compatible = compatible && sigma.satisfies(l);
    if (!compatible) continue;
    for (const Clause& c : f.matrix) {
      bool satisfied = false;
      for (Literal l : c) satisfied = satisfied || sigma.satisfies(l);
      if (!satisfied) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("literal ordering and complement") {
  CHECK(lit(1) < lit(-1));
  CHECK(lit(-1) < lit(2));
  CHECK(lit(2) < lit(-3));
  CHECK(lit(-5).complement() == lit(5));
  CHECK(lit(7).complement().complement() == lit(7));
  CHECK(lit(3).var() == Variable(3));
  CHECK(lit(-3).var() == Variable(3));
}

TEST_CASE("clause and term normalization") {
  Clause c = Clause::of({lit(2), lit(-1), lit(2)});
  CHECK(c.literals() == std::vector<Literal>{lit(-1), lit(2)});
  CHECK(c.contains(lit(2)));
  CHECK(!c.contains(lit(1)));
  CHECK(!c.tautological());
  CHECK(Clause::of({lit(1), lit(-1)}).tautological());

  CHECK(Term::consistent_of({lit(1), lit(-1)}) == std::nullopt);
  CHECK(Term::consistent_of({lit(1), lit(2)}).has_value());
  CHECK_THROWS_AS(Term::of({lit(1), lit(-1)}), rule_error);
}

TEST_CASE("prefix merges adjacent same-quantifier blocks and alternates strictly") {
  Prefix p({{Quantifier::exists, {Variable(1)}},
            {Quantifier::exists, {Variable(2)}},
            {Quantifier::forall, {Variable(3)}},
            {Quantifier::exists, {Variable(4)}}});
  REQUIRE(p.blocks().size() == 3);
  CHECK(p.blocks()[0].vars == std::vector<Variable>{Variable(1), Variable(2)});
  for (std::size_t i = 1; i < p.blocks().size(); ++i)
    CHECK(p.blocks()[i].quant != p.blocks()[i - 1].quant);
  CHECK(p.level(Variable(1)) == 1);
  CHECK(p.level(Variable(2)) == 1);
  CHECK(p.level(Variable(3)) == 2);
  CHECK(p.level(Variable(4)) == 3);
  CHECK(p.num_vars() == 4);
  CHECK_THROWS_AS(p.level(Variable(9)), rule_error);
  CHECK_THROWS_AS(Prefix({{Quantifier::exists, {Variable(1), Variable(1)}}}), rule_error);
}

TEST_CASE("levels on the equivalence family") {
  Qcnf f = gen_iff(2);  // forall x1 exists y1 forall x2 exists y2
  CHECK(f.prefix.level(Variable(4)) == 4);  // y2
  CHECK(f.prefix.level(Variable(1)) == 1);  // x1
  CHECK(f.prefix.level(lit(-2)) == 2);      // level ignores polarity
  CHECK(f.prefix.level(lit(2)) == 2);
  CHECK(f.prefix.universal(Variable(1)));
  CHECK(f.prefix.existential(Variable(2)));
}

TEST_CASE("is_model checks clause intersection") {
  Qcnf f = gen_iff(1);
  CHECK(is_model(f.matrix, Term::of({lit(1), lit(2)})));
  Term bad = Term::of({lit(1), lit(-2)});
  CHECK(!is_model(f.matrix, bad));
  CHECK(first_unhit_clause(f.matrix, bad) == 0);  // clause (-1 2) unhit, (1 -2) hit
  CHECK(is_model({}, Term()));
}

TEST_CASE("empty clause makes a matrix unhittable") {
  std::vector<Clause> matrix = {Clause()};
  CHECK(!is_model(matrix, Term::of({lit(1)})));
}

TEST_CASE("assignment satisfies and falsifies") {
  Assignment tau(3);
  tau.set(Variable(1), true);
  tau.set(Variable(2), false);
  CHECK(tau.satisfies(lit(1)));
  CHECK(tau.falsifies(lit(-1)));
  CHECK(tau.satisfies(lit(-2)));
  CHECK(!tau.satisfies(lit(3)));
  CHECK(!tau.falsifies(lit(3)));
  tau.unset(Variable(1));
  CHECK(!tau.assigns(Variable(1)));
}

TEST_CASE("is_model agrees with the extension-enumeration oracle") {
  // Over tautology-free matrices, hitting every clause is the same as every
  // total extension being a satisfying assignment.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Qcnf f = gen_random_qcnf(seed, {.max_vars = 6, .max_clauses = 5});
    for (std::uint64_t pick = 1; pick < 40; pick += 7) {
      std::vector<Literal> lits;
      for (int id = 1; id <= f.num_vars(); ++id) {
        switch ((pick * 2654435761u + static_cast<std::uint64_t>(id) * seed) % 3) {
          case 0: break;
          case 1: lits.push_back(Literal(Variable(id), true)); break;
          default: lits.push_back(Literal(Variable(id), false)); break;
        }
      }
      Term t = Term::of(std::move(lits));
      CHECK(is_model(f.matrix, t) == all_extensions_satisfy(f, t));
    }
  }
}

TEST_CASE("qcnf validation") {
  CHECK_THROWS_AS(
      validate(Qcnf{Prefix({{Quantifier::exists, {Variable(1)}}}), {Clause::of({lit(2)})}}),
      rule_error);
  CHECK_THROWS_AS(validate(Qcnf{Prefix({{Quantifier::exists, {Variable(2)}}}), {}}), rule_error);
  CHECK_NOTHROW(validate(gen_iff(3)));
}
