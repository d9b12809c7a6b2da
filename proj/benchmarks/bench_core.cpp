#include <benchmark/benchmark.h>

#include "chambers/complex.hpp"
#include "chambers/hecke.hpp"
#include "chambers/treeball.hpp"
#include "chambers/weyl.hpp"

using namespace chambers;

static void BM_EnumerateBall(benchmark::State& state) {
  WeylGroup W("A2");
  for (auto _ : state) benchmark::DoNotOptimize(W.enumerate_ball(state.range(0)));
}
BENCHMARK(BM_EnumerateBall)->Arg(6)->Arg(8)->Arg(10);

static void BM_HeckeMultiply(benchmark::State& state) {
  WeylGroup W("A2");
  HeckeAlgebra H(W);
  HeckeElement a;
  for (const auto& w : W.enumerate_ball(state.range(0))) HeckeAlgebra::add_into(a, H.basis(w));
  for (auto _ : state) benchmark::DoNotOptimize(H.multiply(a, a));
}
BENCHMARK(BM_HeckeMultiply)->Arg(2)->Arg(3);

static void BM_ToBernstein(benchmark::State& state) {
  WeylGroup W("A2");
  HeckeAlgebra H(W);
  HeckeElement h = H.basis(W.translation({1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(H.to_bernstein(h));
}
BENCHMARK(BM_ToBernstein);

static void BM_ClassifyExpander(benchmark::State& state) {
  Graph g = random_regular_graph((int)state.range(0), 3, 7);
  ChamberComplex X = complex_from_graph(g);
  for (auto _ : state) benchmark::DoNotOptimize(classify_expander(X));
}
BENCHMARK(BM_ClassifyExpander)->Arg(20)->Arg(50);

static void BM_TreeBallNorm(benchmark::State& state) {
  TreeBall T(2, (int)state.range(0));
  WeylGroup W("A1");
  HeckeAlgebra H(W);
  std::vector<double> vv = numeric_vvals(W, W.numeric_params({Rat(2)}));
  for (auto _ : state)
    benchmark::DoNotOptimize(T.norm2_lower(W, H, H.h_gen(0), vv, (int)state.range(0) - 3));
}
BENCHMARK(BM_TreeBallNorm)->Arg(8)->Arg(10);

BENCHMARK_MAIN();
