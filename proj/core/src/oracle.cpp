#include "qrtk/oracle.hpp"

#include <algorithm>

#include "qrtk/termres.hpp"

namespace qrtk {
namespace {

/// Matrix residue under a partial assignment: satisfied clauses dropped,
/// falsified literals removed. An empty clause means the residue is false.
struct Residue {
  std::vector<std::vector<int>> clauses;  // DIMACS literals
  bool contradicted = false;
};

Residue make_residue(const Qcnf& f) {
  Residue r;
  r.clauses.reserve(f.matrix.size());
  for (const auto& clause : f.matrix) {
    std::vector<int> lits;
    lits.reserve(clause.size());
    for (Literal l : clause) lits.push_back(l.dimacs());
    if (lits.empty()) r.contradicted = true;
    r.clauses.push_back(std::move(lits));
  }
  return r;
}

Residue assign(const Residue& r, int var, bool value) {
  Residue out;
  out.clauses.reserve(r.clauses.size());
  int satisfied = value ? var : -var;
  for (const auto& clause : r.clauses) {
    if (std::find(clause.begin(), clause.end(), satisfied) != clause.end()) continue;
    std::vector<int> kept;
    kept.reserve(clause.size());
    for (int lit : clause)
      if (std::abs(lit) != var) kept.push_back(lit);
    if (kept.empty()) out.contradicted = true;
    out.clauses.push_back(std::move(kept));
  }
  return out;
}

bool eval_rec(const std::vector<std::pair<Variable, Quantifier>>& order, std::size_t next,
              const Residue& residue) {
  if (residue.contradicted) return false;
  if (residue.clauses.empty()) return true;
  if (next == order.size()) return false;  // unreachable for well-formed input
  auto [v, q] = order[next];
  Residue low = assign(residue, v.id(), false);
  if (q == Quantifier::exists) {
    if (eval_rec(order, next + 1, low)) return true;
    return eval_rec(order, next + 1, assign(residue, v.id(), true));
  }
  if (!eval_rec(order, next + 1, low)) return false;
  return eval_rec(order, next + 1, assign(residue, v.id(), true));
}

void check_budget(const Qcnf& f, const EvalBudget& budget, const char* op) {
  if (f.num_vars() > budget.max_variables)
    throw budget_error(std::string(op) + ": formula has " + std::to_string(f.num_vars()) +
                       " variables, budget is " + std::to_string(budget.max_variables));
}

class ExpansionProver {
 public:
  ExpansionProver(const Qcnf& f, const BranchPolicy& try_one_first)
      : f_(f), order_(f.prefix.flatten()), try_one_first_(try_one_first),
        assignment_(f.num_vars()) {}

  TermProof run() {
    std::uint64_t root = expand(0, make_residue(f_));
    root = reduce_fully(root);
    return std::move(proof_);
  }

 private:
  std::uint64_t expand(std::size_t next, const Residue& residue) {
    if (next == order_.size()) return make_leaf();
    auto [v, q] = order_[next];
    if (q == Quantifier::exists) {
      bool first = try_one_first_ ? try_one_first_(v) : false;
      for (bool value : {first, !first}) {
        Residue rest = assign(residue, v.id(), value);
        if (eval_rec(order_, next + 1, rest)) {
          assignment_.set(v, value);
          std::uint64_t node = expand(next + 1, rest);
          assignment_.unset(v);
          return node;
        }
      }
      throw rule_error("no satisfying value for existential variable " + std::to_string(v.id()));
    }

    // A branch that no longer mentions the variable already proves this
    // level; skipping keeps the result the newest node of the proof.
    assignment_.set(v, true);
    std::uint64_t high = reduce_fully(expand(next + 1, assign(residue, v.id(), true)));
    if (!term_of(high).contains(Literal(v, true))) {
      assignment_.unset(v);
      return high;
    }
    assignment_.set(v, false);
    std::uint64_t low = reduce_fully(expand(next + 1, assign(residue, v.id(), false)));
    assignment_.unset(v);
    if (!term_of(low).contains(Literal(v, false))) return low;
    auto merged = detail::merge_excluding(term_of(high).literals(), term_of(low).literals(), v);
    if (merged.clash)
      throw rule_error("internal: branch terms clash on variable " +
                       std::to_string(merged.clash->id()));
    TermProofNode node;
    node.id = next_id();
    node.kind = StepKind::resolution;
    node.pivot = v;
    node.left = high;
    node.right = low;
    node.term = Term::of(std::move(merged.literals));
    proof_.nodes.push_back(node);
    return node.id;
  }

  /// Chain of single-literal reductions down to the exists-reduced fixpoint.
  std::uint64_t reduce_fully(std::uint64_t id) {
    Term current = term_of(id);
    Term target = exists_reduce(f_, current);
    if (current == target) return id;
    for (Literal l : current) {
      if (target.contains(l)) continue;
      std::vector<Literal> kept;
      for (Literal k : term_of(id)) {
        if (k != l) kept.push_back(k);
      }
      TermProofNode node;
      node.id = next_id();
      node.kind = StepKind::reduction;
      node.child = id;
      node.removed = l;
      node.term = Term::of(std::move(kept));
      proof_.nodes.push_back(node);
      id = node.id;
    }
    return id;
  }

  std::uint64_t make_leaf() {
    std::vector<Literal> lits;
    for (const auto& clause : f_.matrix) {
      for (Literal l : clause) {
        if (assignment_.satisfies(l)) {
          lits.push_back(l);
          break;
        }
      }
    }
    TermProofNode node;
    node.id = next_id();
    node.kind = StepKind::leaf;
    node.term = Term::of(std::move(lits));
    proof_.nodes.push_back(node);
    return node.id;
  }

  const Term& term_of(std::uint64_t id) const {
    // Ids are dense and allocated in node order.
    return proof_.nodes[static_cast<std::size_t>(id) - 1].term;
  }

  std::uint64_t next_id() { return proof_.nodes.size() + 1; }

  const Qcnf& f_;
  std::vector<std::pair<Variable, Quantifier>> order_;
  BranchPolicy try_one_first_;
  Assignment assignment_;
  TermProof proof_;
};

}  // namespace

bool evaluate(const Qcnf& f, const EvalBudget& budget) {
  check_budget(f, budget, "evaluate");
  if (f.matrix.empty()) return true;
  return eval_rec(f.prefix.flatten(), 0, make_residue(f));
}

TermProof prove_by_expansion(const Qcnf& f, const EvalBudget& budget,
                             const BranchPolicy& try_one_first) {
  check_budget(f, budget, "prove_by_expansion");
  if (!evaluate(f, budget)) throw rule_error("formula is false; no term proof exists");
  return ExpansionProver(f, try_one_first).run();
}

void for_each_model(const Qcnf& f, const EvalBudget& budget,
                    const std::function<void(const Term&)>& visit) {
  check_budget(f, budget, "enumerate_models");
  std::vector<Literal> current;
  int n = f.num_vars();
  auto recurse = [&](auto&& self, int id) -> void {
    if (id > n) {
      Term t = Term::of(current);
      if (is_model(f.matrix, t)) visit(t);
      return;
    }
    Variable v(id);
    self(self, id + 1);
    for (bool positive : {true, false}) {
      current.push_back(Literal(v, positive));
      self(self, id + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 1);
}

std::vector<Term> enumerate_models(const Qcnf& f, const EvalBudget& budget) {
  std::vector<Term> out;
  for_each_model(f, budget, [&](const Term& t) { out.push_back(t); });
  return out;
}

}  // namespace qrtk
