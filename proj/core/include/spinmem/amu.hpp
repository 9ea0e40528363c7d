#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "spinmem/decode.hpp"
#include "spinmem/noise.hpp"
#include "spinmem/pattern.hpp"
#include "spinmem/synapse.hpp"

namespace spinmem::amu {

enum class RedrawPolicy { fresh_noise, fixed_input };

struct AmuConfig {
    int theta = 0;
    double t0 = 1.0;       // decay period, seconds
    double freq = 1.0;     // attempt frequency, attempts/second
    RedrawPolicy redraw = RedrawPolicy::fresh_noise;
    int max_external_cycles = 0;
    bool keep_trace = false;

    /// Attempts per internal cycle: |{k >= 0 : k/f < t0}|. The boundary
    /// attempt at t = t0 does not run.
    int attempts_per_cycle() const;
};

/// A stored memory: the learned (possibly damaged) network plus the
/// reference tag used by the comparison block.
struct AmuUnit {
    nn::SynapseMatrix network;
    codec::SpinPattern reference;

    static AmuUnit make(const codec::SpinPattern& x0, double eta) {
        return {nn::SynapseMatrix::learn(x0, eta), x0};
    }
};

/// Cue strength is m damaged components out of N (q = 1 - m/N). Under the
/// fixed-input policy an explicit input may be supplied; otherwise one
/// damaged sample is drawn at the start of the run and frozen.
struct Cue {
    int m = 0;
    std::optional<codec::SpinPattern> fixed_input;
};

struct AttemptRecord {
    codec::SpinPattern x_in;
    codec::SpinPattern x_out;
    bool matched;
};

struct RetrievalOutcome {
    bool success = false;
    bool cap_exhausted = false;  // failed with the continue-policy still willing
    long long attempts = 0;
    double elapsed = 0.0;        // (attempts - 1) / freq
    int external_cycles = 0;
    std::vector<AttemptRecord> trace;  // populated when keep_trace
};

/// Decides whether retrieval continues after an internal cycle exhausts t0.
using ContinuePolicy = std::function<bool(int external_cycles, double elapsed)>;

/// One retrieval run through the nested loops: gate in a cue-damaged input,
/// decode, compare with the reference; retry at period 1/f while t < t0;
/// on exhaustion consult the continue policy and reset the clock.
RetrievalOutcome retrieve(const AmuUnit& unit, const Cue& cue, const AmuConfig& cfg,
                          const ContinuePolicy& policy, NoiseSource noise);

struct RetrievalStatistics {
    long long runs = 0;
    long long successes = 0;
    long long total_attempts = 0;
    std::map<long long, long long> attempts_histogram;  // successful runs only
    double success_rate = 0.0;
    double per_attempt_rate = 0.0;  // successes / total attempts
};

RetrievalStatistics retrieval_statistics(const AmuUnit& unit, const Cue& cue,
                                         const AmuConfig& cfg, const ContinuePolicy& policy,
                                         long long runs, NoiseSource noise);

}  // namespace spinmem::amu
