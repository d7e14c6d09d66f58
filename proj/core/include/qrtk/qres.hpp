#pragma once

#include <optional>

#include "qrtk/proof.hpp"
#include "qrtk/qcnf.hpp"

namespace qrtk {

enum class ResolutionMode { q, qu };

/// Removes every universal literal that is not blocked by a deeper
/// existential literal of the clause. Idempotent; never touches existentials.
Clause forall_reduce(const Qcnf& f, const Clause& c);

/// The two-step resolvent: union of the antecedents minus both pivot
/// polarities, then forall-reduction. nullopt when the union contains a
/// complementary pair. The pivot must occur positively in `pos` and
/// negatively in `neg`; in mode q it must be existential (rule_error
/// otherwise, distinct from the nullopt outcome).
std::optional<Clause> q_resolvent(const Qcnf& f, const Clause& pos, const Clause& neg,
                                  Variable pivot, ResolutionMode mode);

/// Validates every node of the proof against the formula. Input leaves must
/// equal a matrix clause after forall-reduction (tautological matrix clauses
/// are not usable as proof inputs). Resolution nodes must store the
/// propositional resolvent of their antecedents; reduction nodes must remove
/// exactly one unblocked universal literal. The proof refutes the formula
/// when the report is valid and the root clause is empty.
CheckReport check_clause_proof(const Qcnf& f, const ClauseProof& p, ResolutionMode mode);

}  // namespace qrtk
