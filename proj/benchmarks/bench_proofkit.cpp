/* Copyright 2026 The proofkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include <benchmark/benchmark.h>

#include "proofkit/nd_build.hpp"
#include "proofkit/proof_io.hpp"
#include "proofkit/reduce.hpp"
#include "proofkit/seq_build.hpp"
#include "proofkit/seq_check.hpp"
#include "proofkit/trace.hpp"
#include "proofkit/transform.hpp"

namespace {

using namespace proofkit;

Formula sample_formula() {
  return parse_formula("G (p /\\ q) -> (F ~p \\/ X X (q -> G p))");
}

NdDerivation golden_g_and() {
  Formula p = Formula::var("p");
  Formula q = Formula::var("q");
  Formula pq = Formula::conj(p, q);
  NdDerivation shifted = nd::g_e(NdDerivation::hyp(Formula::globally(pq), 1), IndexExpr(0),
                                 IndexExpr::var("j"), pq);
  NdDerivation projected = nd::and_e1(std::move(shifted), IndexExpr::var("j"), p, q);
  NdDerivation all = nd::g_i(nd::tail_family("j", std::move(projected)), IndexExpr(0), p);
  return nd::imp_i(std::move(all), IndexExpr(0), Formula::globally(pq), Formula::globally(p), 1);
}

void BM_ParseFormula(benchmark::State& state) {
  std::string text = print_formula(sample_formula());
  for (auto _ : state) benchmark::DoNotOptimize(parse_formula(text));
}
BENCHMARK(BM_ParseFormula);

void BM_DeriveIdentity(benchmark::State& state) {
  Formula f = sample_formula();
  for (auto _ : state)
    benchmark::DoNotOptimize(derive_identity(f, IndexExpr(1), {}, Calculus::Slt));
}
BENCHMARK(BM_DeriveIdentity);

void BM_CheckIdentity(benchmark::State& state) {
  SeqDerivation d = derive_identity(sample_formula(), IndexExpr(1), {}, Calculus::Slt);
  for (auto _ : state) benchmark::DoNotOptimize(check_slt(d));
}
BENCHMARK(BM_CheckIdentity);

void BM_PrintParseDerivation(benchmark::State& state) {
  SeqDerivation d = derive_identity(sample_formula(), IndexExpr(0), {}, Calculus::Slt);
  for (auto _ : state) {
    std::string text = print_seq_derivation(d);
    benchmark::DoNotOptimize(parse_seq_derivation(text));
  }
}
BENCHMARK(BM_PrintParseDerivation);

void BM_NdToSequent(benchmark::State& state) {
  NdDerivation d = golden_g_and();
  for (auto _ : state) benchmark::DoNotOptimize(nlt_to_slt(d));
}
BENCHMARK(BM_NdToSequent);

void BM_CutEliminationPipeline(benchmark::State& state) {
  SeqDerivation d = nlt_to_slt(golden_g_and());
  for (auto _ : state) benchmark::DoNotOptimize(cut_eliminate_slt(d));
}
BENCHMARK(BM_CutEliminationPipeline);

void BM_NormalizeIndirect(benchmark::State& state) {
  NdDerivation d = golden_g_and();
  for (auto _ : state) benchmark::DoNotOptimize(normalize_indirect(d));
}
BENCHMARK(BM_NormalizeIndirect);

void BM_ReduceDriver(benchmark::State& state) {
  NdDerivation base = golden_g_and();
  NdDerivation detoured = nd::and_e1(nd::and_i(base, base, IndexExpr(0), base.conclusion(),
                                               base.conclusion()),
                                     IndexExpr(0), base.conclusion(), base.conclusion());
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_normal(detoured, 1000));
}
BENCHMARK(BM_ReduceDriver);

void BM_TraceOracle(benchmark::State& state) {
  Formula f = parse_formula("G (p /\\ q) -> G p");
  for (auto _ : state) benchmark::DoNotOptimize(find_falsifying_trace(f, {"p", "q"}, 5));
}
BENCHMARK(BM_TraceOracle);

}  // namespace

BENCHMARK_MAIN();
