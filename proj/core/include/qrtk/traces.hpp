#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "qrtk/proof.hpp"

namespace qrtk {

/// Line-oriented proof trace:
///   p qpt <numvars> <numnodes>          (clause proofs; 'p tpt' for term proofs)
///   <id> <lit>* 0 <antecedent>* 0
/// Zero antecedents mark a leaf, one a reduction, two a resolution. Node ids
/// must be strictly increasing and antecedents must refer to earlier nodes.
/// The resolution pivot is inferred as the unique variable occurring with
/// opposite polarities in the antecedents; ambiguity is a format error.
ClauseProof parse_clause_trace(std::istream& in);
ClauseProof parse_clause_trace(const std::string& text);
TermProof parse_term_trace(std::istream& in);
TermProof parse_term_trace(const std::string& text);

/// Parses either trace kind, dispatching on the header keyword.
std::variant<ClauseProof, TermProof> parse_trace(std::istream& in);

std::string serialize_clause_trace(const ClauseProof& p, int num_vars);
std::string serialize_term_trace(const TermProof& p, int num_vars);

}  // namespace qrtk
