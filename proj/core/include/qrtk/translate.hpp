#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qrtk/negation.hpp"
#include "qrtk/qres.hpp"
#include "qrtk/termres.hpp"

namespace qrtk {

struct TranslationReport {
  std::size_t input_size = 0;    // term proof size (resolutions + reduced literals)
  std::size_t output_size = 0;   // refutation size under the same convention
  std::size_t formula_size = 0;  // variables + clauses of the original formula
  std::size_t bound = 0;         // (formula_size + input_size)^2

  // Term leaf id -> the resolution nodes deriving its negation.
  std::vector<std::pair<std::uint64_t, std::vector<std::uint64_t>>> leaf_chains;
};

struct Translation {
  ClauseProof proof;
  TranslationReport report;
};

/// Compiles an accepted term-resolution proof of f into a refutation of
/// negate(f), checkable in plain q-resolution mode. Each model leaf becomes
/// a chain that resolves the all-indicators clause against one witness
/// clause per matrix clause (witness: the smallest literal of clause ∩
/// model); every term resolution maps to a resolution on the same variable
/// and every exists-reduction to a forall-reduction of the complementary
/// literal. Output size stays within report.bound.
Translation translate(const Qcnf& f, const TermProof& p, const NegResult& n);

/// Serializes the report as one key=value per line.
std::string serialize_translation_report(const TranslationReport& r);

}  // namespace qrtk
