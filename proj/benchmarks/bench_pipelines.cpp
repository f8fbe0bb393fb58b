#include <benchmark/benchmark.h>

#include "lir/casetable.hpp"
#include "lir/decomposition.hpp"
#include "lir/families.hpp"
#include "lir/independent.hpp"
#include "lir/lift.hpp"
#include "lir/phi.hpp"
#include "lir/regular.hpp"

using namespace lir;

static void BM_CaseCheck(benchmark::State& state) {
    for (auto _ : state) {
        CaseTable t = middle_part_casecheck();
        benchmark::DoNotOptimize(t.extension.size());
    }
}
BENCHMARK(BM_CaseCheck)->Unit(benchmark::kMillisecond);

static void BM_SubcubicLift(benchmark::State& state) {
    auto family = enumerate_connected_subcubic((int)state.range(0));
    for (auto _ : state) {
        long long ok = 0;
        for (const Multigraph& g : family) {
            try {
                auto d = pertinent_decomposition(g);
                auto phi = find_phi(g, d);
                auto c = lift_double_3(g, d, phi);
                ok += c.colors.size();
            } catch (const error&) {
            }
        }
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_SubcubicLift)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_IndependentFamily(benchmark::State& state) {
    auto family = enumerate_connected_subcubic((int)state.range(0));
    std::vector<Multigraph> eligible;
    for (const Multigraph& g : family) {
        bool ok = true;
        for (const auto& p : g.pairs)
            if (g.degree(p.u) == 3 && g.degree(p.v) == 3) ok = false;
        if (ok && g.n != 2) eligible.push_back(g);
    }
    for (auto _ : state) {
        long long total = 0;
        for (const Multigraph& g : eligible) total += color_subcubic_independent(g).colors.size();
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_IndependentFamily)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

static void BM_RegularConstructor(benchmark::State& state) {
    Multigraph g = random_regular(10, 4, 3);
    for (auto _ : state) {
        auto c = color_regular_double(g);
        benchmark::DoNotOptimize(c.colors.size());
    }
}
BENCHMARK(BM_RegularConstructor)->Unit(benchmark::kMillisecond);
