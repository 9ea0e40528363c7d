#include "spinmem/amu.hpp"

#include <stdexcept>

#include "spinmem/mask.hpp"

namespace spinmem::amu {

int AmuConfig::attempts_per_cycle() const {
    if (t0 <= 0.0) throw std::invalid_argument("AmuConfig: t0 must be > 0");
    if (freq <= 0.0) throw std::invalid_argument("AmuConfig: freq must be > 0");
    constexpr int kCap = 10'000'000;
    int k = 0;
    while (k < kCap && static_cast<double>(k) / freq < t0) ++k;
    if (k == 0 || k == kCap)
        throw std::invalid_argument("AmuConfig: t0 * freq out of supported range");
    return k;
}

RetrievalOutcome retrieve(const AmuUnit& unit, const Cue& cue, const AmuConfig& cfg,
                          const ContinuePolicy& policy, NoiseSource noise) {
    const std::size_t n = unit.reference.size();
    if (cue.m < 0 || static_cast<std::size_t>(cue.m) > n)
        throw std::invalid_argument("retrieve: cue damage count must be in 0..N");
    if (cue.fixed_input && cue.fixed_input->size() != n)
        throw std::invalid_argument("retrieve: fixed input dimension mismatch");

    const int per_cycle = cfg.attempts_per_cycle();
    const nn::NeuronConfig ncfg{static_cast<double>(cfg.theta), 0.0};
    auto masks = noise.substream(1);
    auto signs = noise.substream(2);

    auto draw_input = [&]() {
        const auto mask = codec::sample_mask(n, static_cast<std::size_t>(cue.m), masks);
        return codec::apply_damage(unit.reference, mask, signs);
    };

    std::optional<codec::SpinPattern> frozen;
    if (cfg.redraw == RedrawPolicy::fixed_input)
        frozen = cue.fixed_input ? *cue.fixed_input : draw_input();

    RetrievalOutcome out;
    while (true) {
        // internal loop 1-2-3-4-1: retry at period 1/f while t < t0
        for (int k = 0; k < per_cycle; ++k) {
            ++out.attempts;
            const codec::SpinPattern x_in = frozen ? *frozen : draw_input();
            const codec::SpinPattern x_out = nn::nn_decode(unit.network, ncfg, x_in);
            const bool matched = x_out == unit.reference;
            if (cfg.keep_trace) out.trace.push_back({x_in, x_out, matched});
            if (matched) {
                out.success = true;
                out.elapsed = static_cast<double>(out.attempts - 1) / cfg.freq;
                return out;
            }
        }
        out.elapsed = static_cast<double>(out.attempts - 1) / cfg.freq;
        // block 5: external decision; block 6: clock reset
        if (!policy(out.external_cycles, out.elapsed)) return out;
        if (out.external_cycles >= cfg.max_external_cycles) {
            out.cap_exhausted = true;
            return out;
        }
        ++out.external_cycles;
    }
}

RetrievalStatistics retrieval_statistics(const AmuUnit& unit, const Cue& cue,
                                         const AmuConfig& cfg, const ContinuePolicy& policy,
                                         long long runs, NoiseSource noise) {
    if (runs < 1) throw std::invalid_argument("retrieval_statistics: runs must be >= 1");
    RetrievalStatistics stats;
    stats.runs = runs;
    for (long long r = 0; r < runs; ++r) {
        auto outcome = retrieve(unit, cue, cfg, policy,
                                noise.substream(static_cast<std::uint64_t>(r)));
        stats.total_attempts += outcome.attempts;
        if (outcome.success) {
            ++stats.successes;
            ++stats.attempts_histogram[outcome.attempts];
        }
    }
    stats.success_rate = static_cast<double>(stats.successes) / static_cast<double>(runs);
    stats.per_attempt_rate =
        static_cast<double>(stats.successes) / static_cast<double>(stats.total_attempts);
    return stats;
}

}  // namespace spinmem::amu
