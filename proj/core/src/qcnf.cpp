#include "qrtk/qcnf.hpp"

#include <algorithm>

namespace qrtk {

Prefix::Prefix(std::vector<QuantifierBlock> blocks) {
  for (auto& block : blocks) {
    if (block.vars.empty()) continue;
    if (!blocks_.empty() && blocks_.back().quant == block.quant) {
      auto& tail = blocks_.back().vars;
      tail.insert(tail.end(), block.vars.begin(), block.vars.end());
    } else {
      blocks_.push_back(std::move(block));
    }
  }
  int level = 0;
  for (const auto& block : blocks_) {
    ++level;
    for (Variable v : block.vars) {
      if (!v.valid()) throw rule_error("prefix variable ids must be positive");
      if (v.id() >= static_cast<int>(level_of_.size()))
        level_of_.resize(static_cast<std::size_t>(v.id()) + 1, 0);
      if (level_of_[static_cast<std::size_t>(v.id())] != 0)
        throw rule_error("variable " + std::to_string(v.id()) + " quantified twice");
      level_of_[static_cast<std::size_t>(v.id())] = level;
      ++num_vars_;
    }
  }
}

std::vector<std::pair<Variable, Quantifier>> Prefix::flatten() const {
  std::vector<std::pair<Variable, Quantifier>> out;
  out.reserve(static_cast<std::size_t>(num_vars_));
  for (const auto& block : blocks_)
    for (Variable v : block.vars) out.emplace_back(v, block.quant);
  return out;
}

void validate(const Qcnf& f) {
  for (const auto& block : f.prefix.blocks())
    for (Variable v : block.vars)
      if (v.id() > f.prefix.num_vars())
        throw rule_error("prefix variables are not dense: id " + std::to_string(v.id()) +
                         " exceeds count " + std::to_string(f.prefix.num_vars()));
  for (const auto& clause : f.matrix)
    for (Literal l : clause)
      if (!f.prefix.bound(l.var()))
        throw rule_error("matrix variable " + std::to_string(l.var().id()) + " is not bound");
}

bool is_model(const std::vector<Clause>& matrix, const Term& t) {
  return !first_unhit_clause(matrix, t).has_value();
}

std::optional<std::size_t> first_unhit_clause(const std::vector<Clause>& matrix, const Term& t) {
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    bool hit = false;
    for (Literal l : matrix[i]) {
      if (t.contains(l)) {
        hit = true;
        break;
      }
    }
    if (!hit) return i;
  }
  return std::nullopt;
}

}  // namespace qrtk
