#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "spinmem/noise.hpp"
#include "spinmem/pattern.hpp"
#include "spinmem/rational.hpp"

namespace spinmem::codec {

/// Marks which components of a reference pattern are replaced by noise.
/// d = m/N is the damage degree, q = 1 - d the cue index; d + q = 1 exactly.
class DamageMask {
public:
    explicit DamageMask(std::vector<std::uint8_t> marks) : marks_(std::move(marks)) {
        if (marks_.empty())
            throw std::invalid_argument("DamageMask: length must be >= 1");
        for (auto u : marks_)
            if (u > 1) throw std::invalid_argument("DamageMask: marks must be 0 or 1");
    }

    std::size_t size() const { return marks_.size(); }
    bool marked(std::size_t i) const { return marks_[i] != 0; }

    std::size_t damaged_count() const {
        return static_cast<std::size_t>(
            std::accumulate(marks_.begin(), marks_.end(), std::size_t{0}));
    }

    Rational damage_degree() const {
        return {static_cast<std::int64_t>(damaged_count()),
                static_cast<std::int64_t>(size())};
    }
    Rational cue_index() const { return Rational{1} - damage_degree(); }

    const std::vector<std::uint8_t>& marks() const { return marks_; }

private:
    std::vector<std::uint8_t> marks_;
};

/// Mask with exactly m marks, uniform over the C(N,m) placements.
/// Uniformity over placements (not per-position Bernoulli) keeps d fixed.
inline DamageMask sample_mask(std::size_t n, std::size_t m, NoiseSource& noise) {
    if (m > n) throw std::invalid_argument("sample_mask: m > N");
    // partial Fisher-Yates over index slots
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<std::uint8_t> marks(n, 0);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t j = k + static_cast<std::size_t>(noise.below(n - k));
        std::swap(idx[k], idx[j]);
        marks[idx[k]] = 1;
    }
    return DamageMask(std::move(marks));
}

/// Damaged copy of x0: marked components get a fresh random sign, the rest
/// pass through untouched.
inline SpinPattern apply_damage(const SpinPattern& x0, const DamageMask& mask,
                                NoiseSource& noise) {
    if (mask.size() != x0.size())
        throw std::invalid_argument("apply_damage: mask/pattern length mismatch");
    std::vector<std::int8_t> c(x0.size());
    for (std::size_t i = 0; i < x0.size(); ++i)
        c[i] = mask.marked(i) ? static_cast<std::int8_t>(noise.sign())
                              : static_cast<std::int8_t>(x0[i]);
    return SpinPattern(std::move(c));
}

}  // namespace spinmem::codec
