#include <doctest.h>

#include "qrtk/bce.hpp"
#include "qrtk/families.hpp"
#include "qrtk/oracle.hpp"
#include "qrtk/qdimacs.hpp"
#include "qrtk/random_qcnf.hpp"

using namespace qrtk;

namespace {
Literal lit(int code) { return Literal::from_dimacs(code); }
}  // namespace

TEST_CASE("y1 blocks the first equivalence clause") {
  Qcnf f = gen_iff(1);
  CHECK(is_blocked_literal(f, f.matrix[0], lit(2)));
  CHECK(!is_blocked_literal(f, f.matrix[0], lit(-1)));  // universal literals never block
  CHECK_THROWS_AS(is_blocked_literal(f, f.matrix[0], lit(1)), rule_error);  // not in the clause
}

TEST_CASE("the dense two-variable matrix has no blocked literal") {
  Qcnf f = parse_qdimacs("p cnf 2 4\ne 1 2 0\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n");
  for (const Clause& c : f.matrix)
    for (Literal l : c) CHECK(!is_blocked_literal(f, c, l));
}

TEST_CASE("a literal without complementary occurrences is vacuously blocked") {
  Qcnf f = parse_qdimacs("p cnf 2 2\ne 1 2 0\n1 2 0\n1 -2 0\n");
  CHECK(is_blocked_literal(f, f.matrix[0], lit(1)));
}

TEST_CASE("elimination empties the equivalence family clause by clause") {
  for (int n : {1, 3, 10}) {
    BceTrace trace = eliminate_blocked(gen_iff(n));
    CHECK(trace.residual.matrix.empty());
    CHECK(trace.eliminations.size() == static_cast<std::size_t>(2 * n));
  }
  BceTrace t1 = eliminate_blocked(gen_iff(1));
  REQUIRE(t1.eliminations.size() == 2);
  CHECK(t1.eliminations[0].clause_index == 0);
  CHECK(t1.eliminations[0].blocking == lit(2));
  CHECK(t1.eliminations[1].clause_index == 1);
  CHECK(t1.eliminations[1].blocking == lit(-2));
  CHECK(serialize_bce_trace(t1) == "1 2\n2 -2\n");
}

TEST_CASE("blocked-free matrices are left untouched") {
  Qcnf f = parse_qdimacs("p cnf 2 4\ne 1 2 0\n1 2 0\n-1 2 0\n1 -2 0\n-1 -2 0\n");
  BceTrace trace = eliminate_blocked(f);
  CHECK(trace.eliminations.empty());
  CHECK(trace.residual == f);
}

TEST_CASE("empty matrix gives an empty trace") {
  Qcnf f = parse_qdimacs("p cnf 1 0\ne 1 0\n");
  BceTrace trace = eliminate_blocked(f);
  CHECK(trace.eliminations.empty());
  CHECK(trace.residual.matrix.empty());
}

TEST_CASE("every elimination removes exactly one clause") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Qcnf f = gen_random_qcnf(seed);
    BceTrace trace = eliminate_blocked(f);
    CHECK(trace.residual.matrix.size() + trace.eliminations.size() == f.matrix.size());
    // the residual has no blocked clause left
    for (const Clause& c : trace.residual.matrix)
      for (Literal l : c) CHECK(!is_blocked_literal(trace.residual, c, l));
  }
}

TEST_CASE("elimination preserves the truth value") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Qcnf f = gen_random_qcnf(seed);
    BceTrace trace = eliminate_blocked(f);
    CHECK(evaluate(f) == evaluate(trace.residual));
  }
}

TEST_CASE("reverse scan order reaches a semantically equal fixpoint") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Qcnf f = gen_random_qcnf(seed);
    BceTrace forward = eliminate_blocked(f, BceOrder::first);
    BceTrace backward = eliminate_blocked(f, BceOrder::last);
    CHECK(evaluate(forward.residual) == evaluate(backward.residual));
  }
}
