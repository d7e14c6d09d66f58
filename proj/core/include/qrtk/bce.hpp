#pragma once

#include <string>
#include <vector>

#include "qrtk/qcnf.hpp"

namespace qrtk {

struct BceElimination {
  std::size_t clause_index = 0;  // 0-based index into the input matrix
  Literal blocking;
};

struct BceTrace {
  std::vector<BceElimination> eliminations;  // replaying them yields residual
  Qcnf residual;
};

/// Scan direction when picking the next blocked clause.
enum class BceOrder { first, last };

/// An existential literal l of C is blocked when every clause of the matrix
/// holding the complement of l shares a clashing pair with C at or below
/// l's level: some k in C with its complement in that clause, var(k) != var(l),
/// and level(k) <= level(l). Universal literals never block.
bool is_blocked_literal(const Qcnf& f, const Clause& c, Literal l);

/// Removes blocked clauses until none remains, rechecking after every
/// removal. Truth value is preserved. The prefix is left untouched.
BceTrace eliminate_blocked(const Qcnf& f, BceOrder order = BceOrder::first);

/// One line per elimination: 1-based clause index, then the blocking literal.
std::string serialize_bce_trace(const BceTrace& t);

}  // namespace qrtk
