#include "qrtk/termres.hpp"

#include <algorithm>
#include <unordered_map>

namespace qrtk {
namespace {

int max_universal_level(const Qcnf& f, const std::vector<Literal>& lits) {
  int level = 0;
  for (Literal l : lits)
    if (f.prefix.universal(l)) level = std::max(level, f.prefix.level(l));
  return level;
}

}  // namespace

Term exists_reduce(const Qcnf& f, const Term& t) {
  int bound = max_universal_level(f, t.literals());
  std::vector<Literal> kept;
  kept.reserve(t.size());
  for (Literal l : t)
    if (f.prefix.universal(l) || f.prefix.level(l) < bound) kept.push_back(l);
  return Term::of(std::move(kept));
}

std::optional<Term> term_resolvent(const Qcnf& f, const Term& pos, const Term& neg,
                                   Variable pivot) {
  if (!f.prefix.universal(pivot))
    throw rule_error("term resolution pivot " + std::to_string(pivot.id()) + " is not universal");
  if (!pos.contains(Literal(pivot, true)))
    throw rule_error("pivot " + std::to_string(pivot.id()) + " does not occur positively in the first antecedent");
  if (!neg.contains(Literal(pivot, false)))
    throw rule_error("pivot " + std::to_string(pivot.id()) + " does not occur negatively in the second antecedent");
  auto merged = detail::merge_excluding(pos.literals(), neg.literals(), pivot);
  if (merged.clash) return std::nullopt;
  return exists_reduce(f, Term::of(std::move(merged.literals)));
}

CheckReport check_term_proof(const Qcnf& f, const TermProof& p) {
  CheckReport report;
  if (p.nodes.empty()) {
    report.diagnostics.push_back({0, "proof has no nodes"});
    return report;
  }

  auto flag = [&](std::uint64_t id, std::string message) {
    report.diagnostics.push_back({id, std::move(message)});
  };

  std::unordered_map<std::uint64_t, std::size_t> index;
  std::uint64_t prev_id = 0;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const auto& node = p.nodes[i];
    if (node.id <= prev_id) flag(node.id, "node ids must be strictly increasing");
    prev_id = std::max(prev_id, node.id);

    bool vars_ok = true;
    for (Literal l : node.term)
      if (!f.prefix.bound(l.var())) {
        flag(node.id, "variable " + std::to_string(l.var().id()) + " is not bound by the prefix");
        vars_ok = false;
      }
    if (!vars_ok) {
      index.emplace(node.id, i);
      continue;
    }

    auto antecedent = [&](std::uint64_t ref, const char* role) -> const TermProofNode* {
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
        if (auto unhit = first_unhit_clause(f.matrix, node.term))
          flag(node.id, "leaf is not a model; unhit clause " + std::to_string(*unhit + 1) + " {" +
                            to_string(f.matrix[*unhit].literals()) + "}");
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
        if (f.prefix.existential(node.pivot)) {
          flag(node.id, "term resolution pivot " + std::to_string(node.pivot.id()) +
                            " must be universal");
          break;
        }
        if (!left->term.contains(Literal(node.pivot, true)) ||
            !right->term.contains(Literal(node.pivot, false))) {
          flag(node.id, "pivot " + std::to_string(node.pivot.id()) +
                            " does not occur with opposite polarities in the antecedents");
          break;
        }
        if (exists_reduce(f, left->term) != left->term ||
            exists_reduce(f, right->term) != right->term) {
          flag(node.id, "resolution antecedents must be exists-reduced");
          break;
        }
        auto merged = detail::merge_excluding(left->term.literals(), right->term.literals(),
                                              node.pivot);
        if (merged.clash) {
          flag(node.id, "antecedents carry complementary literals on variable " +
                            std::to_string(merged.clash->id()));
          break;
        }
        if (Term::of(std::move(merged.literals)) != node.term)
          flag(node.id, "stored term differs from the computed resolvent");
        break;
      }
      case StepKind::reduction: {
        ++report.reductions;
        const auto* child = antecedent(node.child, "reduction");
        if (!child) break;
        std::vector<Literal> diff;
        for (Literal l : child->term)
          if (!node.term.contains(l)) diff.push_back(l);
        if (diff.size() != 1 || node.term.size() + 1 != child->term.size()) {
          flag(node.id, "reduction must remove exactly one literal of its antecedent");
          break;
        }
        Literal removed = diff.front();
        if (node.removed.valid() && node.removed != removed) {
          flag(node.id, "stored reduction literal differs from the removed literal");
          break;
        }
        if (f.prefix.universal(removed)) {
          flag(node.id, "reduced literal " + to_string(removed) + " is universal");
          break;
        }
        if (f.prefix.level(removed) < max_universal_level(f, child->term.literals()))
          flag(node.id, "reduced literal " + to_string(removed) +
                            " is blocked by a deeper universal literal");
        break;
      }
    }
    index.emplace(node.id, i);
  }

  report.root = p.root().id;
  report.root_literals = p.root().term.literals();
  report.closed = p.root().term.empty();
  report.valid = report.diagnostics.empty();
  return report;
}

bool agrees(const Term& t, const Assignment& tau) {
  for (Literal l : t)
    if (tau.falsifies(l)) return false;
  return true;
}

std::uint64_t find_agreeing_leaf(const TermProof& p, const Assignment& tau) {
  std::unordered_map<std::uint64_t, const TermProofNode*> by_id;
  for (const auto& node : p.nodes) by_id.emplace(node.id, &node);

  const TermProofNode* node = &p.root();
  while (node->kind != StepKind::leaf) {
    if (node->kind == StepKind::reduction) {
      node = by_id.at(node->child);
      continue;
    }
    const TermProofNode* left = by_id.at(node->left);
    const TermProofNode* right = by_id.at(node->right);
    if (agrees(left->term, tau)) {
      node = left;
    } else if (agrees(right->term, tau)) {
      node = right;
    } else {
      throw rule_error("no agreeing antecedent at node " + std::to_string(node->id) +
                       "; the proof is not an accepted term proof");
    }
  }
  return node->id;
}

std::optional<int> min_universal_literals_over_models(const Qcnf& f, int cap) {
  if (f.num_vars() > cap)
    throw budget_error("formula has " + std::to_string(f.num_vars()) +
                       " variables, enumeration budget is " + std::to_string(cap));
  std::optional<int> best;
  std::vector<Literal> current;
  int n = f.num_vars();

  // Every consistent term over variables 1..n: each variable absent,
  // positive, or negative.
  auto recurse = [&](auto&& self, int id, int universal_count) -> void {
    if (best && universal_count >= *best) return;  // cannot improve
    if (id > n) {
      Term t = Term::of(current);
      if (is_model(f.matrix, t)) best = universal_count;
      return;
    }
    Variable v(id);
    bool universal = f.prefix.universal(v);
    self(self, id + 1, universal_count);
    for (bool positive : {true, false}) {
      current.push_back(Literal(v, positive));
      self(self, id + 1, universal_count + (universal ? 1 : 0));
      current.pop_back();
    }
  };
  recurse(recurse, 1, 0);
  return best;
}

}  // namespace qrtk
