#include <benchmark/benchmark.h>

#include <memory>

#include "fintop/enumerate.hpp"
#include "fintop/maps.hpp"
#include "fintop/set_classes.hpp"
#include "fintop/theorems.hpp"

namespace {

const fintop::Proposition& lookup(std::string_view id) {
    for (const auto& p : fintop::registry())
        if (p.id == id) return p;
    throw std::out_of_range(std::string(id));
}

void BM_EnumerateTopologies(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t count = 0;
    for (auto _ : state) {
        count = fintop::count_topologies(n);
        benchmark::DoNotOptimize(count);
    }
    state.counters["spaces"] = static_cast<double>(count);
    state.counters["spaces/s"] =
        benchmark::Counter(static_cast<double>(count), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_EnumerateTopologies)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_ClosureCounter(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(fintop::count_preorders_by_closure(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ClosureCounter)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ClassTableAllFourPointSpaces(benchmark::State& state) {
    const auto spaces = fintop::all_topologies_up_to(4);
    for (auto _ : state)
        for (const auto& t : spaces) {
            fintop::ClassTable table(t);
            benchmark::DoNotOptimize(table);
        }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spaces.size()));
}
BENCHMARK(BM_ClassTableAllFourPointSpaces)->Unit(benchmark::kMillisecond);

void BM_ClassTableWide(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    // A chain: x is in the closure of every later point.
    std::vector<fintop::SubsetMask> rows;
    for (std::size_t x = 0; x < n; ++x) rows.emplace_back(fintop::low_bits(x + 1), n);
    const auto t = fintop::topology_from_minimal_neighborhoods(n, rows);
    for (auto _ : state) {
        fintop::ClassTable table(t);
        benchmark::DoNotOptimize(table);
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_ClassTableWide)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_SetSweep(benchmark::State& state) {
    fintop::SweepConfig config;
    config.budget.max_n = static_cast<std::size_t>(state.range(0));
    config.parallel = state.range(1) != 0;
    for (auto _ : state) benchmark::DoNotOptimize(fintop::verify(lookup("t00"), config));
}
BENCHMARK(BM_SetSweep)->Args({4, 0})->Args({5, 0})->Args({5, 1})->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_MapSweep(benchmark::State& state) {
    fintop::SweepConfig config;
    config.max_map_n = 3;
    config.parallel = state.range(0) != 0;
    std::uint64_t maps = 0;
    for (auto _ : state) {
        const auto r = fintop::verify(lookup("s42"), config);
        maps = r.maps_checked;
        benchmark::DoNotOptimize(r);
    }
    state.counters["maps/s"] = benchmark::Counter(static_cast<double>(maps), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_MapSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
