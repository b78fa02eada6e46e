// Copyright (c) 2026, the rewlab authors
// Licensed under the Apache License Version 2.0.

#include <benchmark/benchmark.h>

#include "rewlab/enumerate.hpp"
#include "rewlab/generalized.hpp"
#include "rewlab/reduction.hpp"
#include "rewlab/syntax.hpp"
#include "rewlab/trs.hpp"
#include "rewlab/typing.hpp"
#include "rewlab/uniform.hpp"

using namespace rewlab;

namespace {

// Nested self-application of the identity: untypable but beta-normalizing,
// gives the full-beta runner something to chew on.
Term church_like(int depth) {
  Term t = parse_term("\\x:A. x");
  Type ty = Type::arrow(Type::base(), Type::base());
  for (int i = 0; i < depth; ++i)
    t = Term::app(Term::lam("g", ty, Term::app(Term::var("g"), Term::var("g"))), t);
  return t;
}

void bm_normalize_a(benchmark::State& state) {
  Term t = parse_term("\\x:(A->A). \\y:A. x (x (x (x y)))");
  for (auto _ : state) benchmark::DoNotOptimize(normalize_a(t));
}
BENCHMARK(bm_normalize_a);

void bm_typable_vs_infer(benchmark::State& state) {
  Term t = parse_term("(\\x:(A->A). \\y:A. x (x y)) f a");
  for (auto _ : state) {
    benchmark::DoNotOptimize(typable(t));
    benchmark::DoNotOptimize(infer(TypingContext{}, t));
  }
}
BENCHMARK(bm_typable_vs_infer);

void bm_enumerate(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t n = 0;
    for_each_closed_term(static_cast<int>(state.range(0)), 1,
                         [&](const Term&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(bm_enumerate)->Arg(4)->Arg(5)->Arg(6);

void bm_build_graph(benchmark::State& state) {
  Term t = parse_term("(\\x:(A->A). x (x a)) f");
  for (auto _ : state)
    benchmark::DoNotOptimize(build_graph(t, Relation::ba, 10000).nodes.size());
}
BENCHMARK(bm_build_graph);

void bm_generalized_search(benchmark::State& state) {
  Term t = parse_term("(\\x:A. \\y:A. y) (\\x:A. x x)");
  for (auto _ : state) benchmark::DoNotOptimize(generalized_typable(t).explored);
}
BENCHMARK(bm_generalized_search);

void bm_lpo_search(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(trs::lpo_terminates(trs::uniform_stc_abstract()).found);
}
BENCHMARK(bm_lpo_search);

void bm_critical_pairs_extended(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(trs::critical_pairs(trs::uniform_stc_extended()).size());
}
BENCHMARK(bm_critical_pairs_extended);

void bm_beta_normalization(benchmark::State& state) {
  Term t = church_like(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(run(t, Relation::b, 10000).steps.size());
}
BENCHMARK(bm_beta_normalization);

}  // namespace

BENCHMARK_MAIN();
