#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qrtk/proof.hpp"

namespace qrtk::detail {

/// Assembles clause proofs with dense ids in creation order. Input nodes are
/// cached by content so shared antecedents become shared DAG nodes.
class ClauseProofBuilder {
 public:
  std::uint64_t input(Clause clause) {
    auto it = cache_.find(clause.literals());
    if (it != cache_.end()) return it->second;
    ClauseProofNode node;
    node.id = next_id();
    node.kind = StepKind::leaf;
    node.clause = std::move(clause);
    proof_.nodes.push_back(node);
    cache_.emplace(proof_.nodes.back().clause.literals(), node.id);
    return node.id;
  }

  /// Resolvent of clause(pos) and clause(neg) on pivot, unreduced.
  std::uint64_t resolve(Variable pivot, std::uint64_t pos, std::uint64_t neg) {
    auto merged = merge_excluding(clause(pos).literals(), clause(neg).literals(), pivot);
    if (merged.clash)
      throw rule_error("internal: resolvent clashes on variable " +
                       std::to_string(merged.clash->id()));
    ClauseProofNode node;
    node.id = next_id();
    node.kind = StepKind::resolution;
    node.pivot = pivot;
    node.left = pos;
    node.right = neg;
    node.clause = Clause::of(std::move(merged.literals));
    proof_.nodes.push_back(node);
    return node.id;
  }

  std::uint64_t reduce(std::uint64_t child, Literal removed) {
    std::vector<Literal> kept;
    for (Literal l : clause(child))
      if (l != removed) kept.push_back(l);
    if (kept.size() == clause(child).size())
      throw rule_error("internal: reduction literal " + to_string(removed) + " is absent");
    ClauseProofNode node;
    node.id = next_id();
    node.kind = StepKind::reduction;
    node.child = child;
    node.removed = removed;
    node.clause = Clause::of(std::move(kept));
    proof_.nodes.push_back(node);
    return node.id;
  }

  const Clause& clause(std::uint64_t id) const {
    return proof_.nodes[static_cast<std::size_t>(id) - 1].clause;
  }

  ClauseProof take() { return std::move(proof_); }

 private:
  std::uint64_t next_id() const { return proof_.nodes.size() + 1; }

  ClauseProof proof_;
  std::map<std::vector<Literal>, std::uint64_t> cache_;
};

}  // namespace qrtk::detail
