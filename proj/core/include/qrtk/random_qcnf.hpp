#pragma once

#include <cstdint>

#include "qrtk/qcnf.hpp"

namespace qrtk {

/// Shape of the seeded random formulas used for property testing. Clauses
/// are nonempty and never tautological; every declared variable is bound.
struct RandomQcnfParams {
  int min_vars = 2;
  int max_vars = 10;
  int min_clauses = 1;
  int max_clauses = 8;
  int max_clause_width = 3;
};

/// Deterministic across platforms for a given seed.
Qcnf gen_random_qcnf(std::uint64_t seed, const RandomQcnfParams& params = {});

}  // namespace qrtk
