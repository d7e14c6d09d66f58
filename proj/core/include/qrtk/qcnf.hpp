#pragma once

#include <utility>
#include <vector>

#include "qrtk/types.hpp"

namespace qrtk {

struct QuantifierBlock {
  Quantifier quant = Quantifier::exists;
  std::vector<Variable> vars;  // declaration order

  friend bool operator==(const QuantifierBlock&, const QuantifierBlock&) = default;
};

/// A quantifier prefix: strictly alternating blocks, each variable bound once.
/// Adjacent blocks with the same quantifier are merged on construction.
/// level(x) is the 1-based index of x's block.
class Prefix {
 public:
  Prefix() = default;
  explicit Prefix(std::vector<QuantifierBlock> blocks);

  const std::vector<QuantifierBlock>& blocks() const { return blocks_; }
  int num_vars() const { return num_vars_; }
  bool empty() const { return blocks_.empty(); }

  bool bound(Variable v) const {
    return v.id() < static_cast<int>(level_of_.size()) && level_of_[static_cast<std::size_t>(v.id())] != 0;
  }

  int level(Variable v) const {
    if (!bound(v)) throw rule_error("unbound variable " + std::to_string(v.id()));
    return level_of_[static_cast<std::size_t>(v.id())];
  }
  int level(Literal l) const { return level(l.var()); }

  Quantifier quantifier(Variable v) const {
    return blocks_[static_cast<std::size_t>(level(v)) - 1].quant;
  }

  bool existential(Variable v) const { return quantifier(v) == Quantifier::exists; }
  bool existential(Literal l) const { return existential(l.var()); }
  bool universal(Variable v) const { return quantifier(v) == Quantifier::forall; }
  bool universal(Literal l) const { return universal(l.var()); }

  /// Variables in prefix order, paired with their quantifier.
  std::vector<std::pair<Variable, Quantifier>> flatten() const;

  friend bool operator==(const Prefix& a, const Prefix& b) { return a.blocks_ == b.blocks_; }

 private:
  std::vector<QuantifierBlock> blocks_;
  std::vector<int> level_of_;  // id -> 1-based block index, 0 = unbound
  int num_vars_ = 0;
};

/// A closed prenex formula with a CNF matrix.
struct Qcnf {
  Prefix prefix;
  std::vector<Clause> matrix;

  int num_vars() const { return prefix.num_vars(); }

  friend bool operator==(const Qcnf&, const Qcnf&) = default;
};

/// Checks that prefix variables are exactly 1..n and every matrix variable is bound.
void validate(const Qcnf& f);

/// True iff every clause of the matrix shares at least one literal with t.
bool is_model(const std::vector<Clause>& matrix, const Term& t);

/// The first clause of the matrix sharing no literal with t, if any.
std::optional<std::size_t> first_unhit_clause(const std::vector<Clause>& matrix, const Term& t);

}  // namespace qrtk
