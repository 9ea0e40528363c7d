#include <benchmark/benchmark.h>

#include "spinmem/amu.hpp"
#include "spinmem/mask.hpp"
#include "spinmem/perf.hpp"

using namespace spinmem;

namespace {

const codec::SpinPattern kX0 = codec::SpinPattern::parse("+-++-++--");

void BM_NnDecode(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    NoiseSource noise(1);
    const auto x0 = codec::SpinPattern::random(n, noise);
    const auto w = nn::SynapseMatrix::learn(x0, 1.0);
    const nn::NeuronConfig cfg{0.0, 0.0};
    const auto x_in = codec::SpinPattern::random(n, noise);
    for (auto _ : state) benchmark::DoNotOptimize(nn::nn_decode(w, cfg, x_in));
}
BENCHMARK(BM_NnDecode)->Arg(9)->Arg(64)->Arg(256);

void BM_PExact(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    perf::ClassifyConfig cfg{0, 1.0, nn::DecodeRule::nn, std::nullopt};
    for (auto _ : state) benchmark::DoNotOptimize(perf::p_exact(kX0, cfg, m));
}
BENCHMARK(BM_PExact)->Arg(4)->Arg(7)->Arg(9);

void BM_PMonteCarlo(benchmark::State& state) {
    perf::ClassifyConfig cfg{0, 1.0, nn::DecodeRule::nn, std::nullopt};
    const auto trials = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(perf::p_monte_carlo(kX0, cfg, 9, trials, NoiseSource(5)));
    state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_PMonteCarlo)->Arg(1000)->Arg(10000);

void BM_Retrieve(benchmark::State& state) {
    auto unit = amu::AmuUnit::make(kX0, 1.0);
    amu::AmuConfig cfg;
    cfg.t0 = 100.0;
    cfg.freq = 1.0;
    auto never = [](int, double) { return false; };
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            amu::retrieve(unit, amu::Cue{9, std::nullopt}, cfg, never, NoiseSource(++seed)));
}
BENCHMARK(BM_Retrieve);

}  // namespace

BENCHMARK_MAIN();
