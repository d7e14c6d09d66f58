#include "qrtk/translate.hpp"

#include <algorithm>
#include <unordered_map>

#include "proof_builder.hpp"

namespace qrtk {
namespace {

class Translator {
 public:
  Translator(const Qcnf& f, const TermProof& p, const NegResult& n) : f_(f), p_(p), n_(n) {}

  Translation run() {
    CheckReport input = check_term_proof(f_, p_);
    if (!input.accepted())
      throw rule_error(std::string("translation requires an accepted term proof") +
                       (input.diagnostics.empty() ? "" : ": " + input.diagnostics.front().message));

    std::vector<Literal> long_clause;
    for (Variable ind : n_.indicators) long_clause.push_back(Literal(ind, false));
    long_node_ = builder_.input(Clause::of(std::move(long_clause)));

    for (const auto& node : p_.nodes) {
      switch (node.kind) {
        case StepKind::leaf:
          mapped_[node.id] = build_leaf_chain(node);
          break;
        case StepKind::reduction:
          mapped_[node.id] = mirror_reduction(node);
          break;
        case StepKind::resolution:
          mapped_[node.id] = mirror_resolution(node);
          break;
      }
    }

    std::uint64_t root = mapped_.at(p_.root().id);
    if (!builder_.clause(root).empty())
      throw rule_error("internal: translated root is not the empty clause");

    Translation result;
    result.proof = builder_.take();
    result.report = std::move(report_);
    prune_unreachable(result, root);
    result.report.input_size = input.size();
    result.report.formula_size = static_cast<std::size_t>(f_.num_vars()) + f_.matrix.size();
    std::size_t base = result.report.formula_size + result.report.input_size;
    result.report.bound = base * base;
    for (const auto& node : result.proof.nodes)
      if (node.kind != StepKind::leaf) ++result.report.output_size;
    return result;
  }

 private:
  /// Derives the negation of a model leaf: resolve the all-indicators clause
  /// against one witness clause per matrix clause, in matrix order. The
  /// witness is the smallest literal shared by the clause and the model.
  std::uint64_t build_leaf_chain(const TermProofNode& leaf) {
    std::uint64_t current = long_node_;
    std::vector<std::uint64_t> chain;
    for (std::size_t j = 0; j < f_.matrix.size(); ++j) {
      Literal witness;
      for (Literal l : f_.matrix[j]) {
        if (leaf.term.contains(l)) {
          witness = l;
          break;
        }
      }
      if (!witness.valid())
        throw rule_error("internal: model leaf misses clause " + std::to_string(j + 1));
      std::uint64_t wnode =
          builder_.input(Clause::of({Literal(n_.indicators[j], true), witness.complement()}));
      current = builder_.resolve(n_.indicators[j], wnode, current);
      chain.push_back(current);
    }
    report_.leaf_chains.emplace_back(leaf.id, std::move(chain));
    return current;
  }

  /// An exists-reduction becomes a forall-reduction of the complementary
  /// literal; when the chains never produced that literal the mapped child
  /// already subsumes the target and stands in unchanged.
  std::uint64_t mirror_reduction(const TermProofNode& node) {
    std::uint64_t child = mapped_.at(node.child);
    Literal mirrored = node.removed.complement();
    if (!builder_.clause(child).contains(mirrored)) return child;
    if (n_.negated.prefix.level(mirrored) < max_existential_level(builder_.clause(child)))
      throw rule_error("internal: mirrored reduction is blocked");
    return builder_.reduce(child, mirrored);
  }

  std::uint64_t mirror_resolution(const TermProofNode& node) {
    std::uint64_t left = mapped_.at(node.left);
    std::uint64_t right = mapped_.at(node.right);
    // The term's positive-pivot side maps to the clause holding the pivot negatively.
    if (!builder_.clause(left).contains(Literal(node.pivot, false))) return left;
    if (!builder_.clause(right).contains(Literal(node.pivot, true))) return right;
    return builder_.resolve(node.pivot, right, left);
  }

  int max_existential_level(const Clause& c) const {
    int level = 0;
    for (Literal l : c)
      if (n_.negated.prefix.existential(l))
        level = std::max(level, n_.negated.prefix.level(l));
    return level;
  }

  /// Keeps the nodes reachable from the root, renumbered densely. Creation
  /// order tops out at the root, so the root stays last.
  static void prune_unreachable(Translation& t, std::uint64_t root) {
    auto& nodes = t.proof.nodes;
    std::vector<bool> keep(nodes.size() + 1, false);
    keep[root] = true;
    for (std::size_t i = nodes.size(); i-- > 0;) {
      const auto& node = nodes[i];
      if (!keep[node.id]) continue;
      if (node.kind == StepKind::resolution) {
        keep[node.left] = true;
        keep[node.right] = true;
      } else if (node.kind == StepKind::reduction) {
        keep[node.child] = true;
      }
    }
    std::vector<std::uint64_t> renumber(nodes.size() + 1, 0);
    std::vector<ClauseProofNode> kept;
    kept.reserve(nodes.size());
    for (auto& node : nodes) {
      if (!keep[node.id]) continue;
      std::uint64_t fresh = kept.size() + 1;
      renumber[node.id] = fresh;
      node.id = fresh;
      if (node.kind == StepKind::resolution) {
        node.left = renumber[node.left];
        node.right = renumber[node.right];
      } else if (node.kind == StepKind::reduction) {
        node.child = renumber[node.child];
      }
      kept.push_back(std::move(node));
    }
    nodes = std::move(kept);
    auto& chains = t.report.leaf_chains;
    for (auto& [leaf, chain] : chains) {
      std::vector<std::uint64_t> updated;
      for (auto id : chain)
        if (renumber[id] != 0) updated.push_back(renumber[id]);
      chain = std::move(updated);
    }
    // Chains of term leaves that the proof never uses prune away entirely.
    std::erase_if(chains, [](const auto& entry) { return entry.second.empty(); });
  }

  const Qcnf& f_;
  const TermProof& p_;
  const NegResult& n_;
  detail::ClauseProofBuilder builder_;
  TranslationReport report_;
  std::unordered_map<std::uint64_t, std::uint64_t> mapped_;
  std::uint64_t long_node_ = 0;
};

}  // namespace

Translation translate(const Qcnf& f, const TermProof& p, const NegResult& n) {
  return Translator(f, p, n).run();
}

std::string serialize_translation_report(const TranslationReport& r) {
  std::string out;
  out += "input_size=" + std::to_string(r.input_size) + '\n';
  out += "output_size=" + std::to_string(r.output_size) + '\n';
  out += "formula_size=" + std::to_string(r.formula_size) + '\n';
  out += "bound=" + std::to_string(r.bound) + '\n';
  for (const auto& [leaf, chain] : r.leaf_chains) {
    out += "leaf_chain_" + std::to_string(leaf) + '=';
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(chain[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace qrtk
