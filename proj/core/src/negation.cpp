#include "qrtk/negation.hpp"

#include <algorithm>

#include "qrtk/oracle.hpp"

namespace qrtk {

NegResult negate(const Qcnf& f) {
  if (f.matrix.empty()) throw rule_error("negation requires a nonempty matrix");
  for (const auto& clause : f.matrix)
    if (clause.empty())
      throw rule_error("negation rejects a matrix containing the empty clause");

  auto sequence = f.prefix.flatten();
  std::vector<int> position(static_cast<std::size_t>(f.num_vars()) + 1, 0);
  for (std::size_t i = 0; i < sequence.size(); ++i)
    position[static_cast<std::size_t>(sequence[i].first.id())] = static_cast<int>(i);

  NegResult out;
  out.indicators.reserve(f.matrix.size());
  out.anchors.reserve(f.matrix.size());

  // Indicators stack after their anchor in clause order. The anchor is the
  // clause's variable occurring deepest in the prefix; within the deepest
  // block the later variable wins.
  std::vector<std::vector<Variable>> after(sequence.size());
  for (std::size_t j = 0; j < f.matrix.size(); ++j) {
    Variable indicator(f.num_vars() + static_cast<int>(j) + 1);
    out.indicators.push_back(indicator);
    int anchor_pos = 0;
    for (Literal l : f.matrix[j])
      anchor_pos = std::max(anchor_pos, position[static_cast<std::size_t>(l.var().id())]);
    out.anchors.push_back(sequence[static_cast<std::size_t>(anchor_pos)].first);
    after[static_cast<std::size_t>(anchor_pos)].push_back(indicator);
  }

  std::vector<QuantifierBlock> blocks;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    blocks.push_back({invert(sequence[i].second), {sequence[i].first}});
    for (Variable indicator : after[i])
      blocks.push_back({Quantifier::exists, {indicator}});
  }

  std::vector<Clause> matrix;
  for (std::size_t j = 0; j < f.matrix.size(); ++j) {
    Literal ind(out.indicators[j], true);
    for (Literal l : f.matrix[j]) matrix.push_back(Clause::of({l.complement(), ind}));
  }
  std::vector<Literal> long_clause;
  for (Variable indicator : out.indicators) long_clause.push_back(Literal(indicator, false));
  matrix.push_back(Clause::of(std::move(long_clause)));

  out.negated = Qcnf{Prefix(std::move(blocks)), std::move(matrix)};
  return out;
}

bool verify_negation_semantics(const Qcnf& f, const NegResult& n, int cap) {
  if (f.num_vars() > cap)
    throw budget_error("formula has " + std::to_string(f.num_vars()) +
                       " variables, verification budget is " + std::to_string(cap));
  bool original = evaluate(f, EvalBudget{cap});
  bool negated = evaluate(n.negated, EvalBudget{n.negated.num_vars()});
  return original != negated;
}

}  // namespace qrtk
