#include "qrtk/random_qcnf.hpp"

#include <algorithm>

namespace qrtk {
namespace {

/// splitmix64; fixed algorithm so seeds reproduce everywhere.
struct Rng {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool flip() { return (next() & 1) != 0; }
};

}  // namespace

Qcnf gen_random_qcnf(std::uint64_t seed, const RandomQcnfParams& params) {
  Rng rng{seed ^ 0xabcdef0123456789ULL};
  int num_vars = rng.between(params.min_vars, params.max_vars);
  int num_clauses = rng.between(params.min_clauses, params.max_clauses);

  std::vector<QuantifierBlock> blocks;
  for (int id = 1; id <= num_vars; ++id)
    blocks.push_back({rng.flip() ? Quantifier::forall : Quantifier::exists, {Variable(id)}});

  std::vector<Clause> matrix;
  matrix.reserve(static_cast<std::size_t>(num_clauses));
  for (int i = 0; i < num_clauses; ++i) {
    int width = rng.between(1, std::min(params.max_clause_width, num_vars));
    std::vector<Literal> lits;
    while (static_cast<int>(lits.size()) < width) {
      Variable v(rng.between(1, num_vars));
      bool taken = std::any_of(lits.begin(), lits.end(),
                               [&](Literal l) { return l.var() == v; });
      if (!taken) lits.push_back(Literal(v, rng.flip()));
    }
    matrix.push_back(Clause::of(std::move(lits)));
  }
  return Qcnf{Prefix(std::move(blocks)), std::move(matrix)};
}

}  // namespace qrtk
