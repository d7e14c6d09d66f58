#include "qrtk/types.hpp"

#include <algorithm>

namespace qrtk {

std::string to_string(Literal l) { return std::to_string(l.dimacs()); }

std::string to_string(const std::vector<Literal>& lits) {
  std::string out;
  for (Literal l : lits) {
    if (!out.empty()) out += ' ';
    out += to_string(l);
  }
  return out;
}

Term Term::of(std::vector<Literal> lits) {
  auto t = consistent_of(std::move(lits));
  if (!t) throw rule_error("term contains complementary literals");
  return *t;
}

namespace detail {

void normalize_literals(std::vector<Literal>& lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

std::optional<Variable> complementary_variable(const std::vector<Literal>& sorted) {
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].var() == sorted[i - 1].var()) return sorted[i].var();
  return std::nullopt;
}

bool sorted_contains(const std::vector<Literal>& sorted, Literal l) {
  return std::binary_search(sorted.begin(), sorted.end(), l);
}

bool sorted_contains_var(const std::vector<Literal>& sorted, Variable v) {
  return sorted_contains(sorted, Literal(v, true)) || sorted_contains(sorted, Literal(v, false));
}

MergeResult merge_excluding(const std::vector<Literal>& a, const std::vector<Literal>& b,
                            Variable pivot) {
  MergeResult out;
  out.literals.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  auto push = [&](Literal l) {
    if (l.var() == pivot) return;
    if (!out.literals.empty() && out.literals.back() == l) return;
    out.literals.push_back(l);
  };
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      push(*ia++);
    } else if (*ib < *ia) {
      push(*ib++);
    } else {
      push(*ia);
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.end(); ++ia) push(*ia);
  for (; ib != b.end(); ++ib) push(*ib);
  if (auto clash = complementary_variable(out.literals)) out.clash = clash;
  return out;
}

}  // namespace detail
}  // namespace qrtk
