#include "qrtk/bce.hpp"

namespace qrtk {
namespace {

bool blocked_in(const Qcnf& f, const std::vector<const Clause*>& matrix, const Clause& c,
                Literal l) {
  if (!f.prefix.existential(l)) return false;
  Literal complement = l.complement();
  int level = f.prefix.level(l);
  for (const Clause* other : matrix) {
    if (!other->contains(complement)) continue;
    bool clashes = false;
    for (Literal k : c) {
      if (k.var() == l.var()) continue;
      if (f.prefix.level(k) <= level && other->contains(k.complement())) {
        clashes = true;
        break;
      }
    }
    if (!clashes) return false;
  }
  return true;
}

/// First blocked literal of the clause in literal order, if any.
std::optional<Literal> blocking_literal(const Qcnf& f, const std::vector<const Clause*>& matrix,
                                        const Clause& c) {
  for (Literal l : c)
    if (blocked_in(f, matrix, c, l)) return l;
  return std::nullopt;
}

}  // namespace

bool is_blocked_literal(const Qcnf& f, const Clause& c, Literal l) {
  if (!c.contains(l)) throw rule_error("literal " + to_string(l) + " is not in the clause");
  std::vector<const Clause*> matrix;
  matrix.reserve(f.matrix.size());
  for (const auto& clause : f.matrix) matrix.push_back(&clause);
  return blocked_in(f, matrix, c, l);
}

BceTrace eliminate_blocked(const Qcnf& f, BceOrder order) {
  std::vector<std::size_t> live(f.matrix.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = i;

  BceTrace trace;
  bool removed = true;
  while (removed) {
    removed = false;
    std::vector<const Clause*> matrix;
    matrix.reserve(live.size());
    for (std::size_t i : live) matrix.push_back(&f.matrix[i]);

    auto scan = [&](std::size_t pos) -> bool {
      const Clause& c = f.matrix[live[pos]];
      if (auto l = blocking_literal(f, matrix, c)) {
        trace.eliminations.push_back({live[pos], *l});
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(pos));
        return true;
      }
      return false;
    };

    if (order == BceOrder::first) {
      for (std::size_t pos = 0; pos < live.size() && !removed; ++pos) removed = scan(pos);
    } else {
      for (std::size_t pos = live.size(); pos-- > 0 && !removed;) removed = scan(pos);
    }
  }

  std::vector<Clause> residual;
  residual.reserve(live.size());
  for (std::size_t i : live) residual.push_back(f.matrix[i]);
  trace.residual = Qcnf{f.prefix, std::move(residual)};
  return trace;
}

std::string serialize_bce_trace(const BceTrace& t) {
  std::string out;
  for (const auto& e : t.eliminations)
    out += std::to_string(e.clause_index + 1) + ' ' + std::to_string(e.blocking.dimacs()) + '\n';
  return out;
}

}  // namespace qrtk
