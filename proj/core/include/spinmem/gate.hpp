#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "spinmem/noise.hpp"
#include "spinmem/pattern.hpp"

namespace spinmem::codec {

struct GateOutput {
    SpinPattern pattern;
    /// How many selected channels were silent and got a random fill.
    std::size_t zero_fill_count;
};

/// N-channel time gate: densifies a ternary pattern by selecting N channels.
/// Nonzero channels pass through as their sign. Silent (zero) channels emit
/// a fresh random sign and are counted, so a fully silent input degenerates
/// to pure noise. Channel indices are 0-based, must be distinct and in range.
inline GateOutput time_gate(const TernaryPattern& t,
                            const std::vector<std::size_t>& channels,
                            NoiseSource& noise) {
    if (channels.empty())
        throw std::invalid_argument("time_gate: channel list must be nonempty");
    std::vector<bool> seen(t.size(), false);
    for (auto ch : channels) {
        if (ch >= t.size())
            throw std::invalid_argument("time_gate: channel index out of range");
        if (seen[ch])
            throw std::invalid_argument("time_gate: duplicate channel index");
        seen[ch] = true;
    }

    std::vector<std::int8_t> out(channels.size());
    std::size_t fills = 0;
    for (std::size_t i = 0; i < channels.size(); ++i) {
        const int v = t[channels[i]];
        if (v == 0) {
            out[i] = static_cast<std::int8_t>(noise.sign());
            ++fills;
        } else {
            out[i] = static_cast<std::int8_t>(v);
        }
    }
    return {SpinPattern(std::move(out)), fills};
}

}  // namespace spinmem::codec
