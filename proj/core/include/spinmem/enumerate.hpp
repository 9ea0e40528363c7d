#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spinmem/pattern.hpp"

namespace spinmem::codec {

/// Raised when an exhaustive computation would exceed the enumeration guard.
/// Callers should fall back to Monte Carlo estimation.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kEnumerationGuardN = 24;

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

/// Visits every damaged variant of x0 with exactly m marked positions:
/// all C(N,m) mask placements in lexicographic order of the marked index
/// set, and for each placement all 2^m sign assignments in binary counting
/// order (bit i of the counter drives the i-th marked position, bit value 1
/// meaning +1). 2^m * C(N,m) visits in total; any fixed order would do, this
/// one is documented for test stability.
template <typename Visitor>
void enumerate_damaged(const SpinPattern& x0, std::size_t m, Visitor&& visit) {
    const std::size_t n = x0.size();
    if (m > n) throw std::invalid_argument("enumerate_damaged: m > N");
    if (n > kEnumerationGuardN)
        throw ResourceLimitError(
            "enumerate_damaged: N exceeds the exhaustive-enumeration guard (" +
            std::to_string(kEnumerationGuardN) + "); use Monte Carlo estimation");

    std::vector<std::size_t> marked(m);
    for (std::size_t i = 0; i < m; ++i) marked[i] = i;

    std::vector<std::int8_t> work(x0.components());
    const std::uint64_t assignments = std::uint64_t{1} << m;

    while (true) {
        for (std::uint64_t bits = 0; bits < assignments; ++bits) {
            for (std::size_t i = 0; i < m; ++i)
                work[marked[i]] = (bits >> i) & 1 ? +1 : -1;
            visit(SpinPattern(work));
        }
        for (std::size_t i = 0; i < m; ++i) work[marked[i]] = x0[marked[i]];

        // next m-combination of {0..n-1} in lexicographic order
        std::size_t i = m;
        while (i > 0 && marked[i - 1] == n - m + (i - 1)) --i;
        if (i == 0) break;
        ++marked[i - 1];
        for (std::size_t j = i; j < m; ++j) marked[j] = marked[j - 1] + 1;
    }
}

}  // namespace spinmem::codec
