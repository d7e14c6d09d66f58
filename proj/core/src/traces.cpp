#include "qrtk/traces.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace qrtk {
namespace {

struct ClauseTraits {
  static constexpr const char* keyword = "qpt";
  using Proof = ClauseProof;
  using Node = ClauseProofNode;
  static void store(Node& node, std::vector<Literal> lits) { node.clause = Clause::of(std::move(lits)); }
  static const std::vector<Literal>& literals(const Node& node) { return node.clause.literals(); }
};

struct TermTraits {
  static constexpr const char* keyword = "tpt";
  using Proof = TermProof;
  using Node = TermProofNode;
  static void store(Node& node, std::vector<Literal> lits) {
    auto term = Term::consistent_of(std::move(lits));
    if (!term) throw parse_error("term node contains complementary literals");
    node.term = *term;
  }
  static const std::vector<Literal>& literals(const Node& node) { return node.term.literals(); }
};

std::vector<Variable> clashing_variables(const std::vector<Literal>& a,
                                         const std::vector<Literal>& b) {
  std::vector<Variable> out;
  for (Literal l : a)
    if (detail::sorted_contains(b, l.complement())) out.push_back(l.var());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Literals of `child` missing from `node`, provided node's literals all occur in child.
std::optional<std::vector<Literal>> removed_literals(const std::vector<Literal>& child,
                                                     const std::vector<Literal>& node) {
  std::vector<Literal> diff;
  for (Literal l : child)
    if (!detail::sorted_contains(node, l)) diff.push_back(l);
  if (node.size() + diff.size() != child.size()) return std::nullopt;  // node has extra literals
  return diff;
}

template <typename Traits>
typename Traits::Proof parse_trace_body(std::istream& in, const std::string& kind_word,
                                        long num_vars, long num_nodes) {
  typename Traits::Proof proof;
  std::unordered_map<std::uint64_t, std::size_t> index;

  std::string line;
  int line_no = 1;  // header already consumed
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;
    if (tok[0] == 'c') continue;
    auto fail = [&](const std::string& what) -> parse_error {
      return parse_error("line " + std::to_string(line_no) + ": " + what);
    };

    typename Traits::Node node;
    try {
      node.id = std::stoull(tok);
    } catch (const std::exception&) {
      throw fail("bad node id '" + tok + "'");
    }
    if (node.id == 0) throw fail("node ids must be positive");
    if (!proof.nodes.empty() && node.id <= proof.nodes.back().id)
      throw fail("node ids must be strictly increasing");

    std::vector<Literal> lits;
    bool lits_done = false;
    long value = 0;
    while (tokens >> value) {
      if (value == 0) {
        lits_done = true;
        break;
      }
      if (std::labs(value) > num_vars)
        throw fail("literal " + std::to_string(value) + " out of range");
      lits.push_back(Literal::from_dimacs(static_cast<int>(value)));
    }
    if (!lits_done) throw fail("literal list not terminated by 0");
    try {
      Traits::store(node, std::move(lits));
    } catch (const parse_error& e) {
      throw fail(e.what());
    }

    std::vector<std::uint64_t> antecedents;
    bool antes_done = false;
    unsigned long long ante = 0;
    while (tokens >> ante) {
      if (ante == 0) {
        antes_done = true;
        if (tokens >> tok) throw fail("trailing tokens after node");
        break;
      }
      antecedents.push_back(ante);
    }
    if (!antes_done) throw fail("antecedent list not terminated by 0");
    for (auto a : antecedents)
      if (!index.contains(a))
        throw fail("antecedent " + std::to_string(a) + " does not refer to an earlier node");

    switch (antecedents.size()) {
      case 0:
        node.kind = StepKind::leaf;
        break;
      case 1: {
        node.kind = StepKind::reduction;
        node.child = antecedents[0];
        const auto& child = proof.nodes[index.at(node.child)];
        auto diff = removed_literals(Traits::literals(child), Traits::literals(node));
        if (diff && diff->size() == 1) node.removed = diff->front();
        break;
      }
      case 2: {
        node.kind = StepKind::resolution;
        const auto& a = proof.nodes[index.at(antecedents[0])];
        const auto& b = proof.nodes[index.at(antecedents[1])];
        auto clash = clashing_variables(Traits::literals(a), Traits::literals(b));
        if (clash.size() != 1)
          throw fail(clash.empty() ? "resolution antecedents share no clashing variable"
                                   : "ambiguous resolution pivot");
        node.pivot = clash.front();
        bool first_positive = detail::sorted_contains(Traits::literals(a), Literal(node.pivot, true));
        node.left = first_positive ? antecedents[0] : antecedents[1];
        node.right = first_positive ? antecedents[1] : antecedents[0];
        break;
      }
      default:
        throw fail("a node takes at most two antecedents");
    }

    index.emplace(node.id, proof.nodes.size());
    proof.nodes.push_back(std::move(node));
  }

  if (proof.nodes.empty()) throw parse_error("empty " + kind_word + " trace");
  if (static_cast<long>(proof.nodes.size()) != num_nodes)
    throw parse_error("node count mismatch: header declares " + std::to_string(num_nodes) +
                      ", found " + std::to_string(proof.nodes.size()));
  return proof;
}

std::string parse_trace_header(std::istream& in, long& num_vars, long& num_nodes) {
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::string tok;
    if (!(tokens >> tok)) continue;
    if (tok[0] == 'c') continue;
    if (tok != "p") throw parse_error("expected trace header 'p qpt|tpt <vars> <nodes>'");
    std::string kind, extra;
    if (!(tokens >> kind >> num_vars >> num_nodes) || num_vars < 0 || num_nodes < 0 ||
        (tokens >> extra))
      throw parse_error("malformed trace header");
    if (kind != "qpt" && kind != "tpt") throw parse_error("unknown trace kind '" + kind + "'");
    return kind;
  }
  throw parse_error("missing trace header");
}

template <typename Traits>
std::string serialize_trace(const typename Traits::Proof& p, int num_vars) {
  std::string out = "p " + std::string(Traits::keyword) + ' ' + std::to_string(num_vars) + ' ' +
                    std::to_string(p.nodes.size()) + '\n';
  for (const auto& node : p.nodes) {
    out += std::to_string(node.id);
    for (Literal l : Traits::literals(node)) out += ' ' + std::to_string(l.dimacs());
    out += " 0";
    switch (node.kind) {
      case StepKind::leaf:
        break;
      case StepKind::reduction:
        out += ' ' + std::to_string(node.child);
        break;
      case StepKind::resolution:
        out += ' ' + std::to_string(node.left) + ' ' + std::to_string(node.right);
        break;
    }
    out += " 0\n";
  }
  return out;
}

}  // namespace

ClauseProof parse_clause_trace(std::istream& in) {
  long num_vars = 0, num_nodes = 0;
  if (parse_trace_header(in, num_vars, num_nodes) != "qpt")
    throw parse_error("expected a 'p qpt' clause trace");
  return parse_trace_body<ClauseTraits>(in, "clause", num_vars, num_nodes);
}

ClauseProof parse_clause_trace(const std::string& text) {
  std::istringstream in(text);
  return parse_clause_trace(in);
}

TermProof parse_term_trace(std::istream& in) {
  long num_vars = 0, num_nodes = 0;
  if (parse_trace_header(in, num_vars, num_nodes) != "tpt")
    throw parse_error("expected a 'p tpt' term trace");
  return parse_trace_body<TermTraits>(in, "term", num_vars, num_nodes);
}

TermProof parse_term_trace(const std::string& text) {
  std::istringstream in(text);
  return parse_term_trace(in);
}

std::variant<ClauseProof, TermProof> parse_trace(std::istream& in) {
  long num_vars = 0, num_nodes = 0;
  std::string kind = parse_trace_header(in, num_vars, num_nodes);
  if (kind == "qpt") return parse_trace_body<ClauseTraits>(in, "clause", num_vars, num_nodes);
  return parse_trace_body<TermTraits>(in, "term", num_vars, num_nodes);
}

std::string serialize_clause_trace(const ClauseProof& p, int num_vars) {
  return serialize_trace<ClauseTraits>(p, num_vars);
}

std::string serialize_term_trace(const TermProof& p, int num_vars) {
  return serialize_trace<TermTraits>(p, num_vars);
}

}  // namespace qrtk
