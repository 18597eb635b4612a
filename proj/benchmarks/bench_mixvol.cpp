#include <benchmark/benchmark.h>

#include "mixvol/criteria.hpp"
#include "mixvol/mixed_volume.hpp"
#include "mixvol/system.hpp"

using namespace mixvol;

namespace {

Point pt(std::initializer_list<int> cs) {
    Point p;
    for (int c : cs) p.push_back(Rat(c));
    return p;
}

std::vector<Polytope> pentagon_pair() {
    return {Polytope::hull({pt({0, 0}), pt({1, 2}), pt({2, 1})}),
            Polytope::hull({pt({2, 0}), pt({0, 1}), pt({1, 2})})};
}

std::vector<Polytope> prism_triple() {
    Polytope q = Polytope::hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({1, 1, 0}),
                                 pt({0, 1, 0}), pt({0, 0, 1}), pt({0, 1, 1})});
    return {q, q, q};
}

SparseSystem prism_system() {
    std::vector<IntVec> pts{{Int(0), Int(0), Int(0)}, {Int(1), Int(0), Int(0)},
                            {Int(1), Int(1), Int(0)}, {Int(0), Int(1), Int(0)},
                            {Int(0), Int(0), Int(1)}, {Int(0), Int(1), Int(1)}};
    RatMatrix c(3, 6);
    int vals[3][6] = {{1, 3, 5, 1, -2, 2}, {1, 1, -3, 3, 1, -1}, {1, 3, 1, 3, -1, 1}};
    for (int r = 0; r < 3; ++r)
        for (int j = 0; j < 6; ++j) c.at(r, j) = vals[r][j];
    return SparseSystem({"x", "y", "z"}, pts, c);
}

} // namespace

static void BM_PolarizationPentagon(benchmark::State& state) {
    auto ps = pentagon_pair();
    for (auto _ : state) benchmark::DoNotOptimize(mixed_volume_polarization(ps));
}
BENCHMARK(BM_PolarizationPentagon);

static void BM_SubdivisionPentagon(benchmark::State& state) {
    auto ps = pentagon_pair();
    for (auto _ : state) benchmark::DoNotOptimize(mixed_volume_subdivision(ps, 0));
}
BENCHMARK(BM_SubdivisionPentagon);

static void BM_InductivePentagon(benchmark::State& state) {
    auto ps = pentagon_pair();
    for (auto _ : state) benchmark::DoNotOptimize(mixed_volume_inductive(ps));
}
BENCHMARK(BM_InductivePentagon);

static void BM_PolarizationPrism(benchmark::State& state) {
    auto ps = prism_triple();
    for (auto _ : state) benchmark::DoNotOptimize(mixed_volume_polarization(ps));
}
BENCHMARK(BM_PolarizationPrism);

static void BM_SubdivisionPrism(benchmark::State& state) {
    auto ps = prism_triple();
    for (auto _ : state) benchmark::DoNotOptimize(mixed_volume_subdivision(ps, 0));
}
BENCHMARK(BM_SubdivisionPrism);

static void BM_InductivePrism(benchmark::State& state) {
    auto ps = prism_triple();
    for (auto _ : state) benchmark::DoNotOptimize(mixed_volume_inductive(ps));
}
BENCHMARK(BM_InductivePrism);

static void BM_HullCayleyPrism(benchmark::State& state) {
    auto ps = prism_triple();
    for (auto _ : state) benchmark::DoNotOptimize(pure_mixed_subdivision(ps, 0));
}
BENCHMARK(BM_HullCayleyPrism);

static void BM_BerCheckPrism(benchmark::State& state) {
    SparseSystem s = prism_system();
    for (auto _ : state) benchmark::DoNotOptimize(ber_check(s));
}
BENCHMARK(BM_BerCheckPrism);

static void BM_StrictMonotonicityPentagon(benchmark::State& state) {
    std::vector<Polytope> ps{Polytope::hull({pt({0, 0}), pt({1, 2}), pt({2, 1})}),
                             Polytope::hull({pt({2, 0}), pt({0, 1}), pt({1, 1})})};
    Polytope q = Polytope::hull(
        {pt({0, 0}), pt({1, 2}), pt({2, 1}), pt({2, 0}), pt({0, 1})});
    for (auto _ : state) benchmark::DoNotOptimize(strict_monotonicity_equal(ps, q));
}
BENCHMARK(BM_StrictMonotonicityPentagon);

BENCHMARK_MAIN();
