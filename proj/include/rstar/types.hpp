#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rstar {

using Symbol = std::uint8_t;
using SymbolString = std::vector<Symbol>;

inline constexpr Symbol kSentinel = 0;

// Closed interval [lo, hi] of 1-based ranks. Empty iff lo > hi.
struct Interval {
    std::size_t lo = 1;
    std::size_t hi = 0;

    [[nodiscard]] bool empty() const { return lo > hi; }
    [[nodiscard]] std::size_t length() const { return empty() ? 0 : hi - lo + 1; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return (a.empty() && b.empty()) || (a.lo == b.lo && a.hi == b.hi);
    }
};

// Interval over suffix-array order.
using SaInterval = Interval;

inline constexpr Interval kEmptyInterval{1, 0};

}  // namespace rstar
