//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include <benchmark/benchmark.h>

#include "knotsemi/altsum.hpp"
#include "knotsemi/diagrams.hpp"
#include "knotsemi/growth.hpp"
#include "knotsemi/oracle.hpp"
#include "knotsemi/presentation.hpp"

namespace {

  using namespace knotsemi;

  // Congruence closure of T(2, n) at L = 4, P = 2.
  void BM_closure_torus(benchmark::State& state) {
    auto p = presentation_from_diagram(
        build_family(family::Torus2{static_cast<std::uint32_t>(state.range(0))}));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_classes(p, 4, 2).counts());
    }
    state.SetItemsProcessed(state.iterations()
                            * static_cast<std::int64_t>(word_universe_size(p.alphabet_size(), 6)));
  }
  BENCHMARK(BM_closure_torus)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);

  void BM_closure_dtw(benchmark::State& state) {
    auto p = presentation_from_diagram(build_family(
        family::DoubleTwist{static_cast<std::uint32_t>(state.range(0)), 2}));
    for (auto _ : state) {
      benchmark::DoNotOptimize(enumerate_classes(p, 3, 2).counts());
    }
  }
  BENCHMARK(BM_closure_dtw)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

  void BM_count_elements(benchmark::State& state) {
    auto s = dtw_alphabet(static_cast<std::uint32_t>(state.range(0)), 4).semigroup();
    for (auto _ : state) {
      benchmark::DoNotOptimize(s.count_elements(20));
    }
  }
  BENCHMARK(BM_count_elements)->RangeMultiplier(2)->Range(2, 64);

  void BM_count_elements_sas(benchmark::State& state) {
    std::vector<std::int64_t> b;
    for (std::int64_t i = 0; i < state.range(0); ++i) {
      b.push_back(i);
    }
    AltSumSemigroup s(GroupG::zmod(state.range(0)), b, true);
    for (auto _ : state) {
      benchmark::DoNotOptimize(s.count_elements(20));
    }
  }
  BENCHMARK(BM_count_elements_sas)->RangeMultiplier(2)->Range(4, 64);

  void BM_skew_growth(benchmark::State& state) {
    auto p = dtw_growth(2, 2, 10);
    for (auto _ : state) {
      benchmark::DoNotOptimize(skew_growth(p, static_cast<std::size_t>(state.range(0))));
    }
  }
  BENCHMARK(BM_skew_growth)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
