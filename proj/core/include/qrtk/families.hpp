#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qrtk/negation.hpp"
#include "qrtk/qres.hpp"

namespace qrtk {

/// The 2N-variable, 2N-clause family forcing each y_i equal to x_i:
/// forall x_1 exists y_1 ... forall x_N exists y_N over (-x_i y_i)(x_i -y_i),
/// with x_i = 2i-1 and y_i = 2i. True for every N; every term proof of it
/// needs at least 2^N model leaves.
Qcnf gen_iff(int n);

/// A refutation of negate(gen_iff(n)) of size exactly 7n: per index, five
/// resolutions replace two indicator literals by x_i and its complement and
/// two reductions drop the y_i literals. Accepted in q-resolution mode.
ClauseProof emit_linear_refutation(int n);

/// An acyclic netlist of NAND gates. Gate inputs refer to declared inputs or
/// earlier gate outputs; input and output ids together are dense 1..V.
struct CircuitGate {
  Variable output;
  Variable in1;
  Variable in2;

  friend bool operator==(const CircuitGate&, const CircuitGate&) = default;
};

struct Circuit {
  std::vector<std::pair<Variable, Quantifier>> inputs;  // declaration order
  std::vector<CircuitGate> gates;                       // topological order

  friend bool operator==(const Circuit&, const Circuit&) = default;
};

void validate(const Circuit& c);

/// Line format: 'input <var> e|a' then 'gate <out> <in1> <in2>', ids positive.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);

/// Clauses (-a -b -o)(a o)(b o) per gate o = nand(a, b); each output variable
/// is quantified existentially at the end of the block holding its deepest
/// input (or in a fresh block right after it). True for every circuit.
Qcnf gen_definitions(const Circuit& c);

/// A refutation of negate(gen_definitions(c)), gate outputs resolved away
/// innermost first. Needs qu-resolution: resolving out a gate output that
/// feeds another gate pivots on a universal variable of the negation.
/// Size is linear in the gate count.
ClauseProof emit_definition_refutation(const Circuit& c);

/// Chain of g NAND gates over one universal input: o_1 = nand(x, x),
/// o_k = nand(o_{k-1}, x).
Circuit nand_chain(int gates);

}  // namespace qrtk
