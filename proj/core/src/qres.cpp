#include "qrtk/qres.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace qrtk {
namespace {

/// Universal literals deeper than every existential literal of the set are unblocked.
int max_existential_level(const Qcnf& f, const std::vector<Literal>& lits) {
  int level = 0;
  for (Literal l : lits)
    if (f.prefix.existential(l)) level = std::max(level, f.prefix.level(l));
  return level;
}

}  // namespace

Clause forall_reduce(const Qcnf& f, const Clause& c) {
  int bound = max_existential_level(f, c.literals());
  std::vector<Literal> kept;
  kept.reserve(c.size());
  for (Literal l : c)
    if (f.prefix.existential(l) || f.prefix.level(l) < bound) kept.push_back(l);
  return Clause::of(std::move(kept));
}

std::optional<Clause> q_resolvent(const Qcnf& f, const Clause& pos, const Clause& neg,
                                  Variable pivot, ResolutionMode mode) {
  if (!pos.contains(Literal(pivot, true)))
    throw rule_error("pivot " + std::to_string(pivot.id()) + " does not occur positively in the first antecedent");
  if (!neg.contains(Literal(pivot, false)))
    throw rule_error("pivot " + std::to_string(pivot.id()) + " does not occur negatively in the second antecedent");
  if (mode == ResolutionMode::q && f.prefix.universal(pivot))
    throw rule_error("universal pivot " + std::to_string(pivot.id()) + " requires qu-resolution");
  auto merged = detail::merge_excluding(pos.literals(), neg.literals(), pivot);
  if (merged.clash) return std::nullopt;
  return forall_reduce(f, Clause::of(std::move(merged.literals)));
}

CheckReport check_clause_proof(const Qcnf& f, const ClauseProof& p, ResolutionMode mode) {
  CheckReport report;
  if (p.nodes.empty()) {
    report.diagnostics.push_back({0, "proof has no nodes"});
    return report;
  }

  auto flag = [&](std::uint64_t id, std::string message) {
    report.diagnostics.push_back({id, std::move(message)});
  };

  // Usable input clauses, forall-reduced. Reducing a tautological clause is
  // unsound, so tautological matrix clauses never match a proof leaf.
  std::set<std::vector<Literal>> inputs;
  for (const auto& clause : f.matrix)
    if (!clause.tautological()) inputs.insert(forall_reduce(f, clause).literals());

  std::unordered_map<std::uint64_t, std::size_t> index;
  std::uint64_t prev_id = 0;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& node = p.nodes[i];
    if (node.id <= prev_id) flag(node.id, "node ids must be strictly increasing");
    prev_id = std::max(prev_id, node.id);

    bool vars_ok = true;
    for (Literal l : node.clause)
      if (!f.prefix.bound(l.var())) {
        flag(node.id, "variable " + std::to_string(l.var().id()) + " is not bound by the prefix");
        vars_ok = false;
      }
    if (!vars_ok) {
      index.emplace(node.id, i);
      continue;
    }

    auto antecedent = [&](std::uint64_t ref, const char* role) -> const ClauseProofNode* {
      auto it = index.find(ref);
      if (it == index.end() || ref >= node.id) {
        flag(node.id, std::string("bad ") + role + " antecedent " + std::to_string(ref));
        return nullptr;
      }
      return &p.nodes[it->second];
    };

    switch (node.kind) {
      case StepKind::leaf: {
        ++report.leaves;
        if (!inputs.contains(node.clause.literals()))
          flag(node.id, "input clause {" + to_string(node.clause.literals()) +
                            "} does not match any forall-reduced matrix clause");
        break;
      }
      case StepKind::resolution: {
        ++report.resolutions;
        const auto* left = antecedent(node.left, "left");
        const auto* right = antecedent(node.right, "right");
        if (!left || !right) break;
        if (node.left == node.right) {
          flag(node.id, "resolution requires distinct antecedents");
          break;
        }
        if (!node.pivot.valid() || !f.prefix.bound(node.pivot)) {
          flag(node.id, "resolution pivot is not a bound variable");
          break;
        }
        if (mode == ResolutionMode::q && f.prefix.universal(node.pivot)) {
          flag(node.id, "universal pivot " + std::to_string(node.pivot.id()) +
                            " is not allowed in q-resolution mode");
          break;
        }
        if (!left->clause.contains(Literal(node.pivot, true)) ||
            !right->clause.contains(Literal(node.pivot, false))) {
          flag(node.id, "pivot " + std::to_string(node.pivot.id()) +
                            " does not occur with opposite polarities in the antecedents");
          break;
        }
        auto merged = detail::merge_excluding(left->clause.literals(), right->clause.literals(),
                                              node.pivot);
        if (merged.clash) {
          flag(node.id, "resolvent is tautological on variable " +
                            std::to_string(merged.clash->id()));
          break;
        }
        if (Clause::of(std::move(merged.literals)) != node.clause)
          flag(node.id, "stored clause differs from the computed resolvent");
        break;
      }
      case StepKind::reduction: {
        ++report.reductions;
        const auto* child = antecedent(node.child, "reduction");
        if (!child) break;
        std::vector<Literal> diff;
        for (Literal l : child->clause)
          if (!node.clause.contains(l)) diff.push_back(l);
        if (diff.size() != 1 || node.clause.size() + 1 != child->clause.size()) {
          flag(node.id, "reduction must remove exactly one literal of its antecedent");
          break;
        }
        Literal removed = diff.front();
        if (node.removed.valid() && node.removed != removed) {
          flag(node.id, "stored reduction literal differs from the removed literal");
          break;
        }
        if (f.prefix.existential(removed)) {
          flag(node.id, "reduced literal " + to_string(removed) + " is existential");
          break;
        }
        if (f.prefix.level(removed) < max_existential_level(f, child->clause.literals()))
          flag(node.id, "reduced literal " + to_string(removed) +
                            " is blocked by a deeper existential literal");
        break;
      }
    }
    index.emplace(node.id, i);
  }

  report.root = p.root().id;
  report.root_literals = p.root().clause.literals();
  report.closed = p.root().clause.empty();
  report.valid = report.diagnostics.empty();
  return report;
}

}  // namespace qrtk
