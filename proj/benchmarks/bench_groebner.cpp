#include <benchmark/benchmark.h>

#include "birat/ring.hpp"

using namespace birat;

static void BM_buchberger_twisted_cubic(benchmark::State& state) {
  ContextPtr ctx = make_context({"x", "y", "z"});
  std::vector<Polynomial> gens = {parse_polynomial(ctx, "x^2 - y"),
                                  parse_polynomial(ctx, "x^3 - z")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::lex()));
  }
}
BENCHMARK(BM_buchberger_twisted_cubic);

static void BM_buchberger_katsura3(benchmark::State& state) {
  ContextPtr ctx = make_context({"a", "b", "c"});
  std::vector<Polynomial> gens = {
      parse_polynomial(ctx, "a + 2*b + 2*c - 1"),
      parse_polynomial(ctx, "a^2 + 2*b^2 + 2*c^2 - a"),
      parse_polynomial(ctx, "2*a*b + 2*b*c - b")};
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(gens, MonomialOrder::grevlex()));
  }
}
BENCHMARK(BM_buchberger_katsura3);

static void BM_subalgebra_membership(benchmark::State& state) {
  ContextPtr ctx = make_context({"t"});
  RingPresentation B = RingPresentation::free_ring(ctx);
  std::vector<Polynomial> gens = {parse_polynomial(ctx, "t^2"), parse_polynomial(ctx, "t^3")};
  Polynomial f = parse_polynomial(ctx, "t^11");
  for (auto _ : state) {
    benchmark::DoNotOptimize(subalgebra_membership(f, gens, B.relations()));
  }
}
BENCHMARK(BM_subalgebra_membership);
