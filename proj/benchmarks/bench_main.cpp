#include <benchmark/benchmark.h>

#include "conehodge/bott.hpp"
#include "conehodge/catalog.hpp"
#include "conehodge/cone.hpp"
#include "conehodge/lcdef.hpp"
#include "conehodge/matrix.hpp"
#include "conehodge/oracle.hpp"

using namespace conehodge;

static void bm_oracle_hodge(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::int64_t m = state.range(1);
  for (auto _ : state) {
    auto h = oracle_hodge_dimension(n, 1, m);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_oracle_hodge)->Args({1, -6})->Args({2, -6})->Args({2, 8})->Unit(benchmark::kMillisecond);

static void bm_bott_box(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        for (std::int64_t k = -12; k <= 12; ++k) total += bott_dimension(n, p, q, k);
      }
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(bm_bott_box)->Arg(2)->Arg(4);

static void bm_catalog_table(benchmark::State& state) {
  const auto spec = parse_selector("P1xP2@1,1");
  for (auto _ : state) {
    auto table = make_catalog_table(spec);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(bm_catalog_table)->Unit(benchmark::kMillisecond);

static void bm_lcdef_both_paths(benchmark::State& state) {
  const auto desc = catalog_descriptor(parse_selector("P1xP2@1,1"));
  for (auto _ : state) {
    auto by_depth = lcdef_cone_depth(desc);
    auto by_lefschetz = lcdef_cone_lefschetz(desc);
    benchmark::DoNotOptimize(by_depth);
    benchmark::DoNotOptimize(by_lefschetz);
  }
}
BENCHMARK(bm_lcdef_both_paths)->Unit(benchmark::kMillisecond);

static void bm_exact_rank(benchmark::State& state) {
  const std::size_t size = static_cast<std::size_t>(state.range(0));
  RationalMatrix m(size, size);
  // Deterministic dense test matrix with nontrivial pivoting.
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      m.at(i, j) = Rational(static_cast<int>((i * 7 + j * 13) % 11) - 5,
                            static_cast<int>((i + j) % 4) + 1);
    }
  }
  for (auto _ : state) {
    auto rank = exact_rank(m);
    benchmark::DoNotOptimize(rank);
  }
}
BENCHMARK(bm_exact_rank)->Arg(8)->Arg(24)->Arg(48);

BENCHMARK_MAIN();
