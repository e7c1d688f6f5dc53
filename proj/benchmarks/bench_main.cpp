#include "dsp/criteria.hpp"
#include "dsp/dsp.hpp"
#include "dsp/jordan.hpp"

#include <benchmark/benchmark.h>

using namespace dsp;

namespace {

ParabolicData staircase() {
    return ParabolicData({{{3, Scalar(1)}, {2, Scalar(2)}, {1, Scalar(1)}},
                          {{1, Scalar(1)}, {1, Scalar(2)}, {1, Scalar(3)}, {1, Scalar(4)}, {1, Scalar(5)}, {1, Scalar(6)}},
                          {{1, Scalar(-1)}, {1, Scalar(-2)}, {1, Scalar(-3)}, {1, Scalar(-4)}, {1, Scalar(-5)}, {1, Scalar(7)}}});
}

MarkedPoints three_points() { return MarkedPoints({Scalar(0), Scalar(1), Scalar(-1)}); }

ParabolicData hypergeometric() {
    return ParabolicData({{{1, Scalar(1)}, {1, Scalar(2)}}, {{1, Scalar(1)}, {1, Scalar(3)}}, {{1, Scalar(0)}, {1, Scalar(2)}}});
}

void BM_BuildConstraints(benchmark::State& st) {
    ParabolicData d = residue_balanced(staircase(), three_points());
    for (auto _ : st) benchmark::DoNotOptimize(build_constraints(d, three_points()));
}
BENCHMARK(BM_BuildConstraints);

void BM_ConstructSection(benchmark::State& st) {
    ParabolicData d = residue_balanced(staircase(), three_points());
    SectionOptions opt;
    opt.seed = 1;
    for (auto _ : st) benchmark::DoNotOptimize(construct_section(d, three_points(), opt));
}
BENCHMARK(BM_ConstructSection);

void BM_IntegralityCertificate(benchmark::State& st) {
    SectionOptions opt;
    opt.seed = 1;
    BiPoly q = assemble(construct_section(hypergeometric(), three_points(), opt));
    IntegralityOptions io;
    io.hints = {{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(1)}, {Scalar(-1), Scalar(0)}};
    for (auto _ : st) benchmark::DoNotOptimize(integrality_certificate(q, IntegralityMode::Auto, io));
}
BENCHMARK(BM_IntegralityCertificate)->Unit(benchmark::kMillisecond);

void BM_ResidueJordanType(benchmark::State& st) {
    ParabolicData d = residue_balanced(staircase(), three_points());
    SectionOptions opt;
    opt.seed = 1;
    BiPoly q = assemble(construct_section(d, three_points(), opt));
    for (auto _ : st) benchmark::DoNotOptimize(residue_jordan_type(q, Scalar(0), Scalar(1), Partition{3, 1}));
}
BENCHMARK(BM_ResidueJordanType)->Unit(benchmark::kMillisecond);

void BM_EquivalenceSweep(benchmark::State& st) {
    int r = static_cast<int>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(equivalence_sweep(2, r, {3, 4}));
}
BENCHMARK(BM_EquivalenceSweep)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
