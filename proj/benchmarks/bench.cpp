#include <benchmark/benchmark.h>

#include "leewb/algebra.hpp"
#include "leewb/conditions.hpp"
#include "leewb/lee.hpp"
#include "leewb/words.hpp"

using namespace leewb;

static void BM_satisfies_un_vn(benchmark::State& state) {
  auto const L  = lee_monoid(4);
  auto const id = make_un_vn(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(satisfies(L, id).holds);
  }
}
BENCHMARK(BM_satisfies_un_vn)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_satisfies_threads(benchmark::State& state) {
  auto const L  = lee_monoid(4);
  auto const id = make_un_vn(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(satisfies(L, id, static_cast<unsigned>(state.range(0))).holds);
  }
}
BENCHMARK(BM_satisfies_threads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_variety_contains(benchmark::State& state) {
  auto const S = lee_monoid(4);
  auto const T = lee_monoid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(variety_contains(S, T).contains);
  }
}
BENCHMARK(BM_variety_contains)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_identity_catalog(benchmark::State& state) {
  auto const L = lee_monoid(4);
  IdentitySearchCaps caps{3, static_cast<std::size_t>(state.range(0)), 3};
  for (auto _ : state) {
    IdentityCatalog cat(L, caps);
    benchmark::DoNotOptimize(cat.num_words());
  }
}
BENCHMARK(BM_identity_catalog)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_match_pattern(benchmark::State& state) {
  auto const u = parse_word("x y x z y");
  auto const U = make_un_vn(static_cast<std::size_t>(state.range(0))).lhs;
  for (auto _ : state) {
    std::size_t n = match_pattern(u, U, SubstitutionMode::IntoPlus,
                                  [](WordSubstitution const&) { return true; });
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_match_pattern)->DenseRange(4, 7);

static void BM_check_manylet(benchmark::State& state) {
  auto const u = make_un_vn(static_cast<std::size_t>(state.range(0))).lhs;
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_manylet(u).verdict);
  }
}
BENCHMARK(BM_check_manylet)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
