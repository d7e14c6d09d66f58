#include "qrtk/qdimacs.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <string>

namespace qrtk {
namespace {

bool parse_int(const std::string& token, long& out) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stol(token, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == token.size();
}

}  // namespace

Qcnf parse_qdimacs(std::istream& in) {
  bool seen_header = false;
  long declared_vars = 0;
  long declared_clauses = 0;
  bool in_matrix = false;

  std::vector<QuantifierBlock> blocks;
  std::vector<bool> quantified;
  std::vector<Clause> matrix;
  std::vector<Literal> pending;
  bool clause_open = false;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    auto fail = [&](const std::string& what) -> parse_error {
      return parse_error("line " + std::to_string(line_no) + ": " + what);
    };

    if (first == "c" || first[0] == 'c') {
      // comment
      continue;
    }
    if (first == "p") {
      if (seen_header) throw fail("duplicate header");
      std::string fmt, vars_tok, clauses_tok, extra;
      if (!(tokens >> fmt >> vars_tok >> clauses_tok) || fmt != "cnf" || (tokens >> extra))
        throw fail("malformed header, expected 'p cnf <vars> <clauses>'");
      if (!parse_int(vars_tok, declared_vars) || !parse_int(clauses_tok, declared_clauses) ||
          declared_vars < 0 || declared_clauses < 0)
        throw fail("malformed header, expected 'p cnf <vars> <clauses>'");
      seen_header = true;
      quantified.assign(static_cast<std::size_t>(declared_vars) + 1, false);
      continue;
    }
    if (!seen_header) throw fail("expected 'p cnf' header before '" + first + "'");

    if (first == "e" || first == "a") {
      if (in_matrix) throw fail("quantifier line after the first clause");
      QuantifierBlock block;
      block.quant = first == "e" ? Quantifier::exists : Quantifier::forall;
      std::string tok;
      bool terminated = false;
      while (tokens >> tok) {
        long id;
        if (!parse_int(tok, id)) throw fail("bad token '" + tok + "' in quantifier line");
        if (id == 0) {
          terminated = true;
          if (tokens >> tok) throw fail("trailing tokens after quantifier terminator");
          break;
        }
        if (id < 0 || id > declared_vars)
          throw fail("variable " + std::to_string(id) + " out of range");
        if (quantified[static_cast<std::size_t>(id)])
          throw fail("variable " + std::to_string(id) + " quantified twice");
        quantified[static_cast<std::size_t>(id)] = true;
        block.vars.push_back(Variable(static_cast<int>(id)));
      }
      if (!terminated) throw fail("quantifier line not terminated by 0");
      if (!block.vars.empty()) blocks.push_back(std::move(block));
      continue;
    }

    // Clause data. Clauses may span lines; each ends at a 0.
    in_matrix = true;
    std::istringstream rest(line);
    std::string tok;
    while (rest >> tok) {
      long lit;
      if (!parse_int(tok, lit)) throw fail("bad token '" + tok + "' in clause");
      if (lit == 0) {
        matrix.push_back(Clause::of(std::move(pending)));
        pending.clear();
        clause_open = false;
        continue;
      }
      if (std::labs(lit) > declared_vars)
        throw fail("literal " + std::to_string(lit) + " out of range");
      pending.push_back(Literal::from_dimacs(static_cast<int>(lit)));
      clause_open = true;
    }
  }

  if (!seen_header) throw parse_error("missing 'p cnf' header");
  if (clause_open) throw parse_error("last clause not terminated by 0");
  if (static_cast<long>(matrix.size()) != declared_clauses)
    throw parse_error("clause count mismatch: header declares " + std::to_string(declared_clauses) +
                      ", found " + std::to_string(matrix.size()));

  // Bind free and undeclared variables in an outermost existential block.
  std::vector<Variable> free_vars;
  for (long id = 1; id <= declared_vars; ++id)
    if (!quantified[static_cast<std::size_t>(id)]) free_vars.push_back(Variable(static_cast<int>(id)));
  if (!free_vars.empty())
    blocks.insert(blocks.begin(), QuantifierBlock{Quantifier::exists, std::move(free_vars)});

  Qcnf f{Prefix(std::move(blocks)), std::move(matrix)};
  validate(f);
  return f;
}

Qcnf parse_qdimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_qdimacs(in);
}

std::string serialize_qdimacs(const Qcnf& f) {
  std::string out;
  out += "p cnf " + std::to_string(f.num_vars()) + ' ' + std::to_string(f.matrix.size()) + '\n';
  for (const auto& block : f.prefix.blocks()) {
    out += block.quant == Quantifier::exists ? 'e' : 'a';
    for (Variable v : block.vars) out += ' ' + std::to_string(v.id());
    out += " 0\n";
  }
  for (const auto& clause : f.matrix) {
    for (Literal l : clause) out += std::to_string(l.dimacs()) + ' ';
    out += "0\n";
  }
  return out;
}

}  // namespace qrtk
