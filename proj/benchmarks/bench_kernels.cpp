#include <benchmark/benchmark.h>

#include "p1kit/pencil.hpp"
#include "p1kit/pointcount.hpp"
#include "p1kit/random.hpp"
#include "p1kit/strata.hpp"

namespace {

using namespace p1kit;

FieldMatrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols) {
  FieldMatrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.scalar(f));
  return m;
}

Pencil random_full_rank(Rng& rng, const Field& f, std::size_t D, std::size_t r) {
  for (;;) {
    Pencil p(random_matrix(rng, f, D + r, D), random_matrix(rng, f, D + r, D));
    if (full_rank_everywhere(p)) return p;
  }
}

void BM_RankRational(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const FieldMatrix m = random_matrix(rng, Field::rationals(), n, n);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(m));
}
BENCHMARK(BM_RankRational)->Arg(8)->Arg(16)->Arg(32);

void BM_RankModular(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const FieldMatrix m = random_matrix(rng, Field::prime_field(1000003), n, n);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_rank(m));
}
BENCHMARK(BM_RankModular)->Arg(8)->Arg(16)->Arg(32);

void BM_MaximalMinors(benchmark::State& state) {
  Rng rng(2);
  const auto D = static_cast<std::size_t>(state.range(0));
  const Pencil p(random_matrix(rng, Field::prime_field(101), D + 2, D), random_matrix(rng, Field::prime_field(101), D + 2, D));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_minors(p));
}
BENCHMARK(BM_MaximalMinors)->DenseRange(2, 8, 2);

void BM_SplittingType(benchmark::State& state) {
  Rng rng(3);
  const auto D = static_cast<std::size_t>(state.range(0));
  const Pencil p = random_full_rank(rng, Field::prime_field(101), D, 3);
  for (auto _ : state) benchmark::DoNotOptimize(splitting_type(p));
}
BENCHMARK(BM_SplittingType)->DenseRange(2, 8, 2);

void BM_SplittingTypeBlockRational(benchmark::State& state) {
  const Pencil p = block_pencil(SplittingType({state.range(0), 1, 0}), Field::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(splitting_type(p));
}
BENCHMARK(BM_SplittingTypeBlockRational)->Arg(2)->Arg(4)->Arg(6);

void BM_KroneckerCount(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_kronecker_locus(2, 1, q, 1e8, threads));
}
BENCHMARK(BM_KroneckerCount)->Args({3, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_SubringBetti(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subring_betti(r, 8));
}
BENCHMARK(BM_SubringBetti)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
