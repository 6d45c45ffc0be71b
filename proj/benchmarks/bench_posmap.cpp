#include <benchmark/benchmark.h>

#include "posmap/decomp.hpp"
#include "posmap/minorant.hpp"
#include "posmap/positivity.hpp"
#include "posmap/rank1.hpp"
#include "posmap/rng.hpp"

using namespace posmap;

namespace {

const ToleranceConfig tol;

void BM_EigHermitian(benchmark::State& state) {
  Rng rng(1);
  const Matrix H = rng.hermitian(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(H));
}
BENCHMARK(BM_EigHermitian)->Arg(4)->Arg(9)->Arg(16)->Arg(36)->Arg(81);

void BM_NumericalRank(benchmark::State& state) {
  Rng rng(2);
  const Matrix M = rng.matrix(static_cast<int>(state.range(0)), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(numerical_rank(M, tol));
}
BENCHMARK(BM_NumericalRank)->Arg(3)->Arg(9)->Arg(27);

void BM_ApplyMap(benchmark::State& state) {
  Rng rng(3);
  const int d = static_cast<int>(state.range(0));
  const LinearMap phi = from_kraus(rng.matrix(d, d));
  const Matrix X = rng.hermitian(d);
  for (auto _ : state) benchmark::DoNotOptimize(phi.apply(X));
}
BENCHMARK(BM_ApplyMap)->Arg(3)->Arg(6)->Arg(9);

void BM_MinProductValue(benchmark::State& state) {
  const LinearMap phi = choi_example();
  for (auto _ : state)
    benchmark::DoNotOptimize(min_product_value(phi, tol, static_cast<int>(state.range(0)), 0));
}
BENCHMARK(BM_MinProductValue)->Arg(10)->Arg(50);

void BM_MinSchmidt2(benchmark::State& state) {
  const LinearMap phi = choi_example();
  for (auto _ : state) benchmark::DoNotOptimize(min_schmidt_k_value(phi, 2, tol, 25, 0));
}
BENCHMARK(BM_MinSchmidt2);

void BM_ClassifyRank1(benchmark::State& state) {
  Rng rng(4);
  const LinearMap phi = from_kraus(rng.matrix(3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(classify_rank1(phi, tol));
}
BENCHMARK(BM_ClassifyRank1);

void BM_ExtremalityFalsifier(benchmark::State& state) {
  Rng rng(5);
  const LinearMap phi =
      scale_add(1.0, from_kraus(rng.matrix(3, 3)), 1.0, from_kraus(rng.matrix(3, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(extremality_falsifier(phi, tol, 25, 0));
}
BENCHMARK(BM_ExtremalityFalsifier);

void BM_DecomposeSearch(benchmark::State& state) {
  Rng rng(6);
  const LinearMap phi =
      scale_add(1.0, from_kraus(rng.matrix(3, 3)), 1.0, from_cokraus(rng.matrix(3, 3)));
  for (auto _ : state) benchmark::DoNotOptimize(decompose_search(phi, tol, 5000));
}
BENCHMARK(BM_DecomposeSearch);

void BM_PptWitnessChoi(benchmark::State& state) {
  const LinearMap phi = choi_example();
  for (auto _ : state) benchmark::DoNotOptimize(ppt_witness_search(phi, tol, 1, 400, 0));
}
BENCHMARK(BM_PptWitnessChoi);

}  // namespace

BENCHMARK_MAIN();
