#include "morsefiber/dgvf.hpp"
#include "morsefiber/homology.hpp"
#include "morsefiber/kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace morsefiber;

namespace {

/// Grid-like clique complex on a k×k vertex lattice with lower-star grades.
OneCriticalFiltration lattice(int k, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(0, 20);
    std::vector<Grade> vertex_grade;
    for (int i = 0; i < k * k; ++i) vertex_grade.push_back(Grade::from_ints({coord(rng), coord(rng)}));
    auto id = [k](int r, int c) { return static_cast<Vertex>(r * k + c); };
    std::vector<std::pair<Simplex, Grade>> graded;
    auto add = [&](std::vector<Vertex> vs) {
        std::sort(vs.begin(), vs.end());
        Grade gr = vertex_grade[vs[0]];
        for (auto v : vs) gr = lub(gr, vertex_grade[v]);
        graded.emplace_back(Simplex(vs), gr);
    };
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            add({id(r, c)});
            if (c + 1 < k) add({id(r, c), id(r, c + 1)});
            if (r + 1 < k) add({id(r, c), id(r + 1, c)});
            if (r + 1 < k && c + 1 < k) {
                add({id(r, c), id(r + 1, c + 1)});
                add({id(r, c), id(r, c + 1), id(r + 1, c + 1)});
                add({id(r, c), id(r + 1, c), id(r + 1, c + 1)});
            }
        }
    }
    return OneCriticalFiltration(2, std::move(graded));
}

std::vector<Line> lines(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> base(-10, 10), slope(1, 6);
    std::vector<Line> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.emplace_back(Grade::from_ints({base(rng), base(rng)}), Grade::from_ints({slope(rng), slope(rng)}));
    }
    return out;
}

struct Setup {
    Setup() : filtration(lattice(6, 7)), field(build_consistent_dgvf(filtration)), rank(filtration, field) {}
    OneCriticalFiltration filtration;
    GradientVectorField field;
    RankInvariant rank;
};

Setup& setup() {
    static Setup s;
    return s;
}

kernels::Execution mode(const benchmark::State& state) {
    return state.range(0) ? kernels::Execution::Parallel : kernels::Execution::Serial;
}

void BM_Signatures(benchmark::State& state) {
    const auto ls = lines(256, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::signature_batch(setup().rank.closure(), ls, mode(state)));
    }
}

void BM_Bars(benchmark::State& state) {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> coord(0, 22);
    std::vector<Grade> points;
    for (int i = 0; i < 2048; ++i) points.push_back(Grade::from_ints({coord(rng), coord(rng)}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::bar_batch(setup().rank.closure(), points, mode(state)));
    }
}

void BM_Fibers(benchmark::State& state) {
    const auto ls = lines(32, 3);
    const auto degrees = all_degrees(setup().filtration);
    for (auto _ : state) {
        const RankInvariant fresh(setup().filtration, setup().field);
        benchmark::DoNotOptimize(kernels::fiber_batch(fresh, ls, degrees, mode(state)));
    }
}

void BM_Reductions(benchmark::State& state) {
    const auto ls = lines(32, 4);
    const auto degrees = all_degrees(setup().filtration);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::reduction_batch(setup().filtration, ls, degrees, mode(state)));
    }
}

}  // namespace

BENCHMARK(BM_Signatures)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Bars)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Fibers)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reductions)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
