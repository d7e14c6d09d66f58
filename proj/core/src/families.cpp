#include "qrtk/families.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "proof_builder.hpp"

namespace qrtk {

Qcnf gen_iff(int n) {
  if (n < 1) throw rule_error("gen_iff requires n >= 1");
  std::vector<QuantifierBlock> blocks;
  std::vector<Clause> matrix;
  blocks.reserve(static_cast<std::size_t>(2 * n));
  matrix.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    Variable x(2 * i - 1);
    Variable y(2 * i);
    blocks.push_back({Quantifier::forall, {x}});
    blocks.push_back({Quantifier::exists, {y}});
    matrix.push_back(Clause::of({Literal(x, false), Literal(y, true)}));
    matrix.push_back(Clause::of({Literal(x, true), Literal(y, false)}));
  }
  return Qcnf{Prefix(std::move(blocks)), std::move(matrix)};
}

ClauseProof emit_linear_refutation(int n) {
  if (n < 1) throw rule_error("emit_linear_refutation requires n >= 1");
  detail::ClauseProofBuilder builder;

  auto x = [](int i) { return Variable(2 * i - 1); };
  auto y = [](int i) { return Variable(2 * i); };
  auto c = [n](int j) { return Variable(2 * n + j); };  // indicator of clause j (1-based)

  std::vector<Literal> all_indicators;
  for (int j = 1; j <= 2 * n; ++j) all_indicators.push_back(Literal(c(j), false));
  std::uint64_t running = builder.input(Clause::of(std::move(all_indicators)));

  // Per index, replace the two indicator negations by the complementary
  // x_i literals and resolve those away; the y_i literals reduce in between.
  for (int i = n; i >= 1; --i) {
    std::uint64_t neg_side = builder.resolve(
        c(2 * i - 1), builder.input(Clause::of({Literal(y(i), false), Literal(c(2 * i - 1), true)})),
        running);
    neg_side = builder.resolve(
        c(2 * i), builder.input(Clause::of({Literal(x(i), false), Literal(c(2 * i), true)})),
        neg_side);
    neg_side = builder.reduce(neg_side, Literal(y(i), false));

    std::uint64_t pos_side = builder.resolve(
        c(2 * i), builder.input(Clause::of({Literal(y(i), true), Literal(c(2 * i), true)})),
        running);
    pos_side = builder.resolve(
        c(2 * i - 1), builder.input(Clause::of({Literal(x(i), true), Literal(c(2 * i - 1), true)})),
        pos_side);
    pos_side = builder.reduce(pos_side, Literal(y(i), true));

    running = builder.resolve(x(i), pos_side, neg_side);
  }
  return builder.take();
}

void validate(const Circuit& c) {
  std::unordered_set<int> declared;
  int max_id = 0;
  auto declare = [&](Variable v, const char* what) {
    if (!v.valid()) throw rule_error(std::string(what) + " ids must be positive");
    if (!declared.insert(v.id()).second)
      throw rule_error(std::string("duplicate ") + what + " id " + std::to_string(v.id()));
    max_id = std::max(max_id, v.id());
  };
  for (const auto& [v, q] : c.inputs) declare(v, "input");
  for (const auto& gate : c.gates) {
    for (Variable in : {gate.in1, gate.in2})
      if (!declared.contains(in.id()))
        throw rule_error("gate input " + std::to_string(in.id()) +
                         " is not a declared input or earlier gate output");
    declare(gate.output, "gate output");
  }
  if (static_cast<std::size_t>(max_id) != declared.size())
    throw rule_error("circuit ids must be dense 1..V");
}

Circuit parse_circuit(std::istream& in) {
  Circuit circuit;
  bool gates_started = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string word;
    if (!(tokens >> word)) continue;
    if (word == "c") continue;
    auto fail = [&](const std::string& what) -> parse_error {
      return parse_error("line " + std::to_string(line_no) + ": " + what);
    };
    if (word == "input") {
      if (gates_started) throw fail("inputs must precede gates");
      long id = 0;
      std::string quant, extra;
      if (!(tokens >> id >> quant) || id <= 0 || (quant != "e" && quant != "a") ||
          (tokens >> extra))
        throw fail("expected 'input <var> e|a'");
      circuit.inputs.emplace_back(Variable(static_cast<int>(id)),
                                  quant == "e" ? Quantifier::exists : Quantifier::forall);
    } else if (word == "gate") {
      gates_started = true;
      long out = 0, a = 0, b = 0;
      std::string extra;
      if (!(tokens >> out >> a >> b) || out <= 0 || a <= 0 || b <= 0 || (tokens >> extra))
        throw fail("expected 'gate <out> <in1> <in2>'");
      circuit.gates.push_back({Variable(static_cast<int>(out)), Variable(static_cast<int>(a)),
                               Variable(static_cast<int>(b))});
    } else {
      throw fail("unknown directive '" + word + "'");
    }
  }
  try {
    validate(circuit);
  } catch (const rule_error& e) {
    throw parse_error(e.what());
  }
  return circuit;
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

Qcnf gen_definitions(const Circuit& c) {
  validate(c);
  std::vector<QuantifierBlock> input_blocks;
  for (const auto& [v, q] : c.inputs) input_blocks.push_back({q, {v}});
  Prefix merged(std::move(input_blocks));
  std::vector<QuantifierBlock> blocks = merged.blocks();

  auto block_of = [&blocks](Variable v) {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (Variable w : blocks[i].vars)
        if (w == v) return i;
    throw rule_error("internal: unplaced circuit signal " + std::to_string(v.id()));
  };

  // Output variables join the existential block at or right after their
  // deepest input's block.
  for (const auto& gate : c.gates) {
    std::size_t anchor = std::max(block_of(gate.in1), block_of(gate.in2));
    if (blocks[anchor].quant == Quantifier::exists) {
      blocks[anchor].vars.push_back(gate.output);
    } else if (anchor + 1 < blocks.size() && blocks[anchor + 1].quant == Quantifier::exists) {
      blocks[anchor + 1].vars.push_back(gate.output);
    } else {
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(anchor) + 1,
                    {Quantifier::exists, {gate.output}});
    }
  }

  std::vector<Clause> matrix;
  matrix.reserve(3 * c.gates.size());
  for (const auto& gate : c.gates) {
    Literal a(gate.in1, true), b(gate.in2, true), o(gate.output, true);
    matrix.push_back(Clause::of({a.complement(), b.complement(), o.complement()}));
    matrix.push_back(Clause::of({a, o}));
    matrix.push_back(Clause::of({b, o}));
  }
  Qcnf f{Prefix(std::move(blocks)), std::move(matrix)};
  validate(f);
  return f;
}

ClauseProof emit_definition_refutation(const Circuit& c) {
  if (c.gates.empty()) throw rule_error("refutation emission requires at least one gate");
  Qcnf f = gen_definitions(c);
  NegResult neg = negate(f);

  // Gate outputs are resolved away innermost first.
  std::vector<int> position(static_cast<std::size_t>(f.num_vars()) + 1, 0);
  {
    auto sequence = f.prefix.flatten();
    for (std::size_t i = 0; i < sequence.size(); ++i)
      position[static_cast<std::size_t>(sequence[i].first.id())] = static_cast<int>(i);
  }
  std::vector<std::size_t> order(c.gates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
    return position[static_cast<std::size_t>(c.gates[lhs].output.id())] >
           position[static_cast<std::size_t>(c.gates[rhs].output.id())];
  });

  detail::ClauseProofBuilder builder;
  std::vector<Literal> all_indicators;
  for (Variable ind : neg.indicators) all_indicators.push_back(Literal(ind, false));
  std::uint64_t running = builder.input(Clause::of(std::move(all_indicators)));

  for (std::size_t t : order) {
    const auto& gate = c.gates[t];
    Literal a(gate.in1, true), b(gate.in2, true), o(gate.output, true);
    Variable k1 = neg.indicators[3 * t];      // from (-a -b -o)
    Variable k2 = neg.indicators[3 * t + 1];  // from (a o)
    Variable k3 = neg.indicators[3 * t + 2];  // from (b o)

    auto chain = [&](Literal from_k1, Literal from_k2, Literal from_k3, Literal reduce_out) {
      std::uint64_t node = builder.resolve(
          k1, builder.input(Clause::of({from_k1, Literal(k1, true)})), running);
      node = builder.resolve(k2, builder.input(Clause::of({from_k2, Literal(k2, true)})), node);
      node = builder.resolve(k3, builder.input(Clause::of({from_k3, Literal(k3, true)})), node);
      return builder.reduce(node, reduce_out);
    };

    // Witness picks per indicator: the gate-output side of each clause for
    // the branch keeping o, the input sides for the branches keeping a or b.
    std::uint64_t both_neg = chain(o, a.complement(), b.complement(), o);
    std::uint64_t b_pos = chain(b, o.complement(), o.complement(), o.complement());
    if (gate.in1 == gate.in2) {
      running = builder.resolve(gate.in1, b_pos, both_neg);
      continue;
    }
    std::uint64_t a_pos = chain(a, o.complement(), o.complement(), o.complement());
    std::uint64_t after_b = builder.resolve(gate.in2, b_pos, both_neg);
    running = builder.resolve(gate.in1, a_pos, after_b);
  }
  return builder.take();
}

Circuit nand_chain(int gates) {
  if (gates < 1) throw rule_error("nand_chain requires at least one gate");
  Circuit c;
  Variable x(1);
  c.inputs.emplace_back(x, Quantifier::forall);
  Variable previous = x;
  for (int g = 1; g <= gates; ++g) {
    Variable out(g + 1);
    c.gates.push_back({out, previous, x});
    previous = out;
  }
  return c;
}

}  // namespace qrtk
