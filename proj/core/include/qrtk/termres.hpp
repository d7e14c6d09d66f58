#pragma once

#include <cstdint>
#include <optional>

#include "qrtk/proof.hpp"
#include "qrtk/qcnf.hpp"

namespace qrtk {

/// Removes every existential literal that is not blocked by a deeper
/// universal literal of the term. Idempotent; never touches universals.
Term exists_reduce(const Qcnf& f, const Term& t);

/// Exists-reduction of the conjunction of both antecedents minus the pivot,
/// which must be universal and occur positively in `pos`, negatively in
/// `neg`. nullopt when the antecedents carry complementary literals.
/// The antecedents are expected to be exists-reduced already; the proof
/// checker enforces that for resolution steps.
std::optional<Term> term_resolvent(const Qcnf& f, const Term& pos, const Term& neg,
                                   Variable pivot);

/// Validates a term-resolution proof: model leaves must hit every matrix
/// clause, resolutions must use universal pivots on exists-reduced
/// antecedents and store the plain conjunction, reductions remove one
/// unblocked existential literal. The proof proves the formula when the
/// report is valid and the root term is empty.
CheckReport check_term_proof(const Qcnf& f, const TermProof& p);

/// A term agrees with an assignment when the assignment falsifies none of
/// its literals. The assignment is expected to touch universal variables only.
bool agrees(const Term& t, const Assignment& tau);

/// Root-to-leaf walk over an accepted proof: a reduction child always agrees
/// with tau, and at a resolution at least one antecedent does (the left one
/// is preferred). Requires tau total over the universal variables.
std::uint64_t find_agreeing_leaf(const TermProof& p, const Assignment& tau);

/// Minimum number of universal literals over all models of the matrix,
/// by enumeration of every consistent term over the declared variables.
/// nullopt when the matrix has no models. Every accepted term proof has at
/// least 2^k leaves, where k is the returned minimum.
std::optional<int> min_universal_literals_over_models(const Qcnf& f, int cap = 14);

}  // namespace qrtk
