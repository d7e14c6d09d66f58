#pragma once

#include <functional>
#include <vector>

#include "qrtk/proof.hpp"
#include "qrtk/qcnf.hpp"

namespace qrtk {

struct EvalBudget {
  int max_variables = 20;
};

/// Truth value by recursive expansion in prefix order.
bool evaluate(const Qcnf& f, const EvalBudget& budget = {});

/// Per-variable choice order for existential branching in prove_by_expansion;
/// returns true to try value 1 first. The default tries 0 first everywhere.
using BranchPolicy = std::function<bool(Variable)>;

/// Builds a term-resolution proof of a true formula: existential variables
/// are committed to the first value that keeps the residual true, universal
/// variables branch both ways; each branch is exists-reduced with explicit
/// reduction steps and the branches are resolved on the branching variable.
/// Leaves are models assembled from the total assignment, keeping the
/// smallest satisfying literal of each clause. Throws rule_error when the
/// formula is false.
TermProof prove_by_expansion(const Qcnf& f, const EvalBudget& budget = {},
                             const BranchPolicy& try_one_first = {});

/// All consistent terms over the declared variables that are models of the
/// matrix, in lexicographic order (per variable: absent, positive, negative).
std::vector<Term> enumerate_models(const Qcnf& f, const EvalBudget& budget = {.max_variables = 14});

void for_each_model(const Qcnf& f, const EvalBudget& budget,
                    const std::function<void(const Term&)>& visit);

}  // namespace qrtk
