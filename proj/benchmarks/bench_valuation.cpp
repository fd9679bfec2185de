#include <benchmark/benchmark.h>

#include "birat/probes.hpp"

using namespace birat;

static void BM_evaluate_rank2(benchmark::State& state) {
  ContextPtr ctx = make_context({"x", "y", "z"});
  RingPresentation B = RingPresentation::free_ring(ctx);
  Valuation v = Valuation::weight(B, {ValueVector::of({1, 0}), ValueVector::of({0, 1}),
                                      ValueVector::of({-1, 2})});
  Polynomial f = parse_polynomial(ctx, "3*x^2*y - z^3 + x*y*z - 7");
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate(v, f));
  }
}
BENCHMARK(BM_evaluate_rank2);

static void BM_retract_pullback(benchmark::State& state) {
  ContextPtr cs = make_context({"x"});
  ContextPtr ct = make_context({"u", "v"});
  RingPresentation S = RingPresentation::free_ring(cs);
  RingPresentation T = RingPresentation::free_ring(ct);
  PairOfRings source(S, {parse_polynomial(cs, "x")});
  PairOfRings target(T, {parse_polynomial(ct, "u")});
  PairHom hom(source, target, {parse_polynomial(ct, "u^2")});
  Valuation v = Valuation::weight(T, {ValueVector::of({1, 0}), ValueVector::of({0, -1})});
  for (auto _ : state) {
    benchmark::DoNotOptimize(bir_map(hom, v));
  }
}
BENCHMARK(BM_retract_pullback);

static void BM_probe_corpus(benchmark::State& state) {
  ContextPtr ctx = make_context({"x", "y"});
  PairOfRings pair(RingPresentation::free_ring(ctx), {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(default_probe_corpus(pair));
  }
}
BENCHMARK(BM_probe_corpus);
