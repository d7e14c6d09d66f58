#pragma once

#include <vector>

#include "qrtk/qcnf.hpp"

namespace qrtk {

/// Result of negating a formula: quantifiers inverted, one fresh existential
/// indicator per clause inserted right after the clause's deepest variable,
/// and a matrix that forces each indicator true when its clause is true plus
/// one clause requiring some indicator false. The result is false iff the
/// input is true.
struct NegResult {
  Qcnf negated;
  std::vector<Variable> indicators;  // input clause index -> indicator variable
  std::vector<Variable> anchors;     // input clause index -> variable the indicator follows
};

/// Indicator for the i-th clause (0-based) gets id num_vars + i + 1. Among
/// indicators anchored at the same variable, clause order decides. Throws
/// rule_error on an empty matrix or a matrix containing the empty clause.
NegResult negate(const Qcnf& f);

/// Brute-force check that f and its negation have opposite truth values.
/// The cap bounds the variable count of f.
bool verify_negation_semantics(const Qcnf& f, const NegResult& n, int cap = 10);

}  // namespace qrtk
