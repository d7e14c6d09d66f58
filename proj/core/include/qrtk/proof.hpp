#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrtk/types.hpp"

namespace qrtk {

enum class StepKind { leaf, resolution, reduction };

/// A node of a clause-resolution proof DAG. Leaf nodes are input clauses,
/// matched against the matrix by content. Resolution nodes store the
/// propositional resolvent of their antecedents; reductions remove exactly
/// one universal literal, so a k-literal reduction is a chain of k nodes.
struct ClauseProofNode {
  std::uint64_t id = 0;
  StepKind kind = StepKind::leaf;
  Clause clause;
  std::uint64_t left = 0;   // resolution: antecedent holding the pivot positively
  std::uint64_t right = 0;  // resolution: antecedent holding the pivot negatively
  Variable pivot;           // resolution
  std::uint64_t child = 0;  // reduction
  Literal removed;          // reduction

  friend bool operator==(const ClauseProofNode&, const ClauseProofNode&) = default;
};

/// A node of a term-resolution proof DAG. Leaf nodes are models of the matrix.
struct TermProofNode {
  std::uint64_t id = 0;
  StepKind kind = StepKind::leaf;
  Term term;
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  Variable pivot;
  std::uint64_t child = 0;
  Literal removed;

  friend bool operator==(const TermProofNode&, const TermProofNode&) = default;
};

/// Node sequence in id order; the last node is the root.
struct ClauseProof {
  std::vector<ClauseProofNode> nodes;

  const ClauseProofNode& root() const { return nodes.back(); }

  friend bool operator==(const ClauseProof&, const ClauseProof&) = default;
};

struct TermProof {
  std::vector<TermProofNode> nodes;

  const TermProofNode& root() const { return nodes.back(); }

  friend bool operator==(const TermProof&, const TermProof&) = default;
};

struct Diagnostic {
  std::uint64_t node = 0;
  std::string message;
};

/// Result of checking a proof. `valid` means every node re-derives under the
/// calculus rules; `closed` means the root is the empty clause (refutation)
/// or the empty term. Proof size counts resolution steps plus reduced
/// literals, each reduced literal separately.
struct CheckReport {
  bool valid = false;
  bool closed = false;
  std::size_t resolutions = 0;
  std::size_t reductions = 0;
  std::size_t leaves = 0;
  std::uint64_t root = 0;
  std::vector<Literal> root_literals;
  std::vector<Diagnostic> diagnostics;

  std::size_t size() const { return resolutions + reductions; }
  bool accepted() const { return valid && closed; }
};

}  // namespace qrtk
