#include <benchmark/benchmark.h>

#include <random>

#include "permdepth/distribution.hpp"
#include "permdepth/motzkin.hpp"
#include "permdepth/permutation.hpp"
#include "permdepth/phi_map.hpp"
#include "permdepth/series.hpp"

using namespace permdepth;

namespace {

Permutation random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

void BM_Depth(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Permutation w = random_permutation(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(depth(w));
}
BENCHMARK(BM_Depth)->Arg(64)->Arg(1024);

void BM_Phi(benchmark::State& state) {
  std::mt19937_64 rng(2);
  Permutation w = random_permutation(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(phi(w));
}
BENCHMARK(BM_Phi)->Arg(64)->Arg(1024);

void BM_EnumeratePaths(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    enumerate_paths(n, [&](const MotzkinPath&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumeratePaths)->Arg(10)->Arg(14);

void BM_TableBrute(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(table_brute(n));
}
BENCHMARK(BM_TableBrute)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_TableMotzkin(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(table_motzkin(n));
}
BENCHMARK(BM_TableMotzkin)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_TableJfrac(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(table_jfrac(n));
}
BENCHMARK(BM_TableJfrac)->Arg(8)->Arg(30)->Arg(60)->Unit(
    benchmark::kMillisecond);

void BM_TableSfrac(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(table_sfrac(n));
}
BENCHMARK(BM_TableSfrac)->Arg(8)->Arg(30)->Arg(60)->Unit(
    benchmark::kMillisecond);

void BM_SeriesReciprocal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int cap = n * n / 4;
  auto one = TruncatedSeries::one(n, cap);
  // 1 - z - t z^2, the outermost level of the linear-plus-quadratic form
  auto a = sub(sub(one, TruncatedSeries::monomial(1, 0, 1, n, cap)),
               TruncatedSeries::monomial(1, 1, 2, n, cap));
  for (auto _ : state) benchmark::DoNotOptimize(reciprocal(a));
}
BENCHMARK(BM_SeriesReciprocal)->Arg(20)->Arg(40);

void BM_PreimageEnumerate(benchmark::State& state) {
  // U^4 H D^4: 9 * (4!)^2 = 5184 members
  MotzkinPath p = parse_path("UUUUHDDDD");
  for (auto _ : state) {
    long long count = 0;
    enumerate_preimage(p, [&](const Permutation&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_PreimageEnumerate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
