#include <benchmark/benchmark.h>

#include "lir/families.hpp"
#include "lir/graph6.hpp"
#include "lir/oracle.hpp"

using namespace lir;

static void BM_BowtieExact(benchmark::State& state) {
    Multigraph b = make_bowtie();
    for (auto _ : state) {
        auto r = exact_lir(b, 4);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_BowtieExact)->Unit(benchmark::kMillisecond);

static void BM_DoubledCliqueTwoColoring(benchmark::State& state) {
    Multigraph g = doubled(make_complete((int)state.range(0)));
    for (auto _ : state) {
        auto c = find_lir_coloring(g, 2);
        benchmark::DoNotOptimize(c.has_value());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DoubledCliqueTwoColoring)->DenseRange(4, 9)->Unit(benchmark::kMillisecond);

static void BM_NsdK8(benchmark::State& state) {
    Multigraph g = make_complete(8);
    for (auto _ : state) {
        auto w = find_nsd_123(g);
        benchmark::DoNotOptimize(w.weight.size());
    }
}
BENCHMARK(BM_NsdK8)->Unit(benchmark::kMillisecond);

static void BM_Graph6Parse(benchmark::State& state) {
    std::string line = emit_graph6(random_connected(40, 0.2, 7));
    for (auto _ : state) {
        Multigraph g = parse_graph6(line);
        benchmark::DoNotOptimize(g.pairs.size());
    }
}
BENCHMARK(BM_Graph6Parse);

BENCHMARK_MAIN();
