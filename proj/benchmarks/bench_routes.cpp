#include "ggp/unipotent.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ggp;

std::pair<DualTorusPair, DualTorusPair> unitary_pair(std::uint64_t q) {
  const FieldParam field(q);
  const DualTorusPair big{TorusDatum{make_label(make_group(Family::U, 4, q), Partition{1, 1, 1, 1})},
                          SemisimpleElement{{one(), one(), normalize(field, 2, q - 1), normalize(field, 2, 2 * (q - 1))}}};
  const DualTorusPair small{TorusDatum{make_label(make_group(Family::U, 3, q), Partition{1, 1, 1})},
                            SemisimpleElement{{one(), normalize(field, 2, q - 1), normalize(field, 2, q - 1)}}};
  return {big, small};
}

std::pair<DualTorusPair, DualTorusPair> orthogonal_pair(std::uint64_t q) {
  const FieldParam field(q);
  const DualTorusPair big{TorusDatum{make_label(make_group(Family::SOodd, 3, q), Partition{2}, Partition{1})},
                          SemisimpleElement{{normalize(field, 2, 1), normalize(field, 2, q - 1)}}};
  const DualTorusPair small{TorusDatum{make_label(make_group(Family::SOminus, 3, q), Partition{2}, Partition{1})},
                            SemisimpleElement{{normalize(field, 2, 1), normalize(field, 2, q - 1)}}};
  return {big, small};
}

template <class Pair>
void run_route(benchmark::State& state, Pair make, Route route) {
  const auto [big, small] = make(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    Integer value;
    if (route == Route::direct) {
      value = reeder_direct(big, small).value;
    } else if (route == Route::closed_form) {
      value = reeder_closed_form(big, small).value;
    } else {
      value = factorized_pairing(big, small).report.value;
    }
    benchmark::DoNotOptimize(value);
  }
}

void BM_UnitaryDirect(benchmark::State& state) { run_route(state, unitary_pair, Route::direct); }
void BM_UnitaryClosed(benchmark::State& state) { run_route(state, unitary_pair, Route::closed_form); }
void BM_UnitaryFactorized(benchmark::State& state) { run_route(state, unitary_pair, Route::factorized); }
void BM_OrthogonalDirect(benchmark::State& state) { run_route(state, orthogonal_pair, Route::direct); }
void BM_OrthogonalClosed(benchmark::State& state) { run_route(state, orthogonal_pair, Route::closed_form); }
void BM_OrthogonalFactorized(benchmark::State& state) { run_route(state, orthogonal_pair, Route::factorized); }

void BM_UnipotentExpansion(benchmark::State& state) {
  const GroupKind group = make_group(Family::U, static_cast<int>(state.range(0)), 5);
  for (auto _ : state) {
    for (const auto& shape : partitions_of(group.rank)) benchmark::DoNotOptimize(unipotent_expansion(group, shape));
  }
}

BENCHMARK(BM_UnitaryDirect)->Arg(3)->Arg(5);
BENCHMARK(BM_UnitaryClosed)->Arg(3)->Arg(5);
BENCHMARK(BM_UnitaryFactorized)->Arg(3)->Arg(5);
BENCHMARK(BM_OrthogonalDirect)->Arg(3)->Arg(5);
BENCHMARK(BM_OrthogonalClosed)->Arg(3)->Arg(5);
BENCHMARK(BM_OrthogonalFactorized)->Arg(3)->Arg(5);
BENCHMARK(BM_UnipotentExpansion)->DenseRange(2, 5);

}  // namespace

BENCHMARK_MAIN();
