#include <benchmark/benchmark.h>

#include "fintop/nerve.hpp"
#include "fintop/reflection.hpp"

using namespace fintop;

namespace {

FiniteSpace chain(std::size_t n) {
  std::vector<std::pair<Point, Point>> pairs;
  for (Point i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_preorder(n, pairs);
}

void BM_IsHomeomorphicFacePoset(benchmark::State& state) {
  const auto x = face_poset(nerve({CoverModel::circle, static_cast<std::size_t>(state.range(0))}));
  const auto y = order_dual(order_dual(x));
  for (auto _ : state) benchmark::DoNotOptimize(is_homeomorphic(x, y));
}
BENCHMARK(BM_IsHomeomorphicFacePoset)->Arg(8)->Arg(32)->Arg(128);

void BM_TowerStageHomology(benchmark::State& state) {
  const auto stage = face_poset(nerve({CoverModel::wedge2, static_cast<std::size_t>(state.range(0))}));
  const auto k = order_complex(stage);
  for (auto _ : state) benchmark::DoNotOptimize(homology(k, Coefficients::rationals()));
}
BENCHMARK(BM_TowerStageHomology)->Arg(4)->Arg(16)->Arg(32);

void BM_IntegerHomology(benchmark::State& state) {
  const auto k = order_complex(face_poset(nerve({CoverModel::circle, static_cast<std::size_t>(state.range(0))})));
  for (auto _ : state) benchmark::DoNotOptimize(homology(k, Coefficients::integers()));
}
BENCHMARK(BM_IntegerHomology)->Arg(8)->Arg(16);

void BM_R3Oracle(benchmark::State& state) {
  const auto x = spaces::discrete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(r3(x, R3Mode::oracle));
}
BENCHMARK(BM_R3Oracle)->DenseRange(3, 6);

void BM_QuotientOfChain(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto x = chain(n);
  std::vector<std::size_t> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = i / 2;
  const auto part = Partition::from_block_ids(ids);
  for (auto _ : state) benchmark::DoNotOptimize(quotient(x, part));
}
BENCHMARK(BM_QuotientOfChain)->Arg(16)->Arg(64);

void BM_BuildTower(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_tower(CoverModel::circle, 4, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_BuildTower)->Arg(3)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
