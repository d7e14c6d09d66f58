#include <benchmark/benchmark.h>

#include "qrtk/bce.hpp"
#include "qrtk/families.hpp"
#include "qrtk/negation.hpp"
#include "qrtk/oracle.hpp"
#include "qrtk/qres.hpp"
#include "qrtk/translate.hpp"

namespace {

void BM_EmitLinearRefutation(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto proof = qrtk::emit_linear_refutation(n);
    benchmark::DoNotOptimize(proof);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_EmitLinearRefutation)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_CheckLinearRefutation(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto f = qrtk::negate(qrtk::gen_iff(n)).negated;
  auto proof = qrtk::emit_linear_refutation(n);
  for (auto _ : state) {
    auto report = qrtk::check_clause_proof(f, proof, qrtk::ResolutionMode::q);
    benchmark::DoNotOptimize(report);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_CheckLinearRefutation)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_BlockedClauseElimination(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto f = qrtk::gen_iff(n);
  for (auto _ : state) {
    auto trace = qrtk::eliminate_blocked(f);
    benchmark::DoNotOptimize(trace);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_BlockedClauseElimination)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_TranslateExpansionProof(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto f = qrtk::gen_iff(n);
  auto proof = qrtk::prove_by_expansion(f);
  auto neg = qrtk::negate(f);
  for (auto _ : state) {
    auto result = qrtk::translate(f, proof, neg);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_TranslateExpansionProof)->DenseRange(1, 7, 2);

void BM_Evaluate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto f = qrtk::gen_iff(n);
  for (auto _ : state) {
    bool value = qrtk::evaluate(f);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_Evaluate)->DenseRange(2, 8, 2);

void BM_EmitDefinitionRefutation(benchmark::State& state) {
  int gates = static_cast<int>(state.range(0));
  auto circuit = qrtk::nand_chain(gates);
  for (auto _ : state) {
    auto proof = qrtk::emit_definition_refutation(circuit);
    benchmark::DoNotOptimize(proof);
  }
  state.SetComplexityN(gates);
}
BENCHMARK(BM_EmitDefinitionRefutation)->RangeMultiplier(2)->Range(8, 64)->Complexity();

}  // namespace

BENCHMARK_MAIN();
