#include <benchmark/benchmark.h>

#include <cstdint>

#include "msn/centrality.hpp"
#include "msn/complementarity.hpp"
#include "msn/msn.hpp"
#include "msn/synthgen.hpp"

namespace {

msn::MultiStratumNetwork make_net(std::uint64_t n, std::uint32_t k, double p, double theta,
                                  double q, std::uint64_t seed) {
    msn::PillarGenSpec spec;
    spec.n = n;
    spec.k = k;
    spec.base_p = p;
    spec.theta = theta;
    spec.extra_q = q;
    spec.seed = seed;
    return msn::generate_pillar(spec);
}

void BM_GeneratePillar(benchmark::State& state) {
    msn::PillarGenSpec spec;
    spec.n = std::uint64_t(state.range(0));
    spec.k = 3;
    spec.base_p = 0.002;
    spec.theta = 0.3;
    spec.extra_q = 0.001;
    spec.seed = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(msn::generate_pillar(spec));
    }
}
BENCHMARK(BM_GeneratePillar)->Arg(500)->Arg(2000);

void BM_FlatBuild(benchmark::State& state) {
    msn::MultiStratumNetwork net =
        make_net(std::uint64_t(state.range(0)), 3, 0.002, 0.3, 0.001, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(msn::flat(net));
    }
}
BENCHMARK(BM_FlatBuild)->Arg(500)->Arg(2000);

void BM_DistancesFrom(benchmark::State& state) {
    msn::MultiStratumNetwork net =
        make_net(std::uint64_t(state.range(0)), 3, 0.002, 0.3, 0.001, 3);
    msn::FlatGraph fg = msn::flat(net);
    msn::ActorIndex source = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(msn::distances_from(fg, net.actors(), source));
        source = (source + 1) % msn::ActorIndex(net.actors().size());
    }
}
BENCHMARK(BM_DistancesFrom)->Arg(500)->Arg(2000);

void BM_Closeness(benchmark::State& state) {
    msn::MultiStratumNetwork net =
        make_net(std::uint64_t(state.range(0)), 3, 0.002, 0.3, 0.001, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(msn::all_ms_closeness(net));
    }
}
BENCHMARK(BM_Closeness)->Arg(500)->Arg(1000);

void BM_Betweenness(benchmark::State& state) {
    msn::MultiStratumNetwork net =
        make_net(std::uint64_t(state.range(0)), 2, 0.05, 0.2, 0.01, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(msn::ms_betweenness(net));
    }
}
BENCHMARK(BM_Betweenness)->Arg(50)->Arg(150);

void BM_Nci(benchmark::State& state) {
    msn::MultiStratumNetwork net =
        make_net(std::uint64_t(state.range(0)), 2, 0.005, 0.5, 0.001, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(msn::nci(net, 0, 1, msn::DegreeMode::All));
    }
}
BENCHMARK(BM_Nci)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
