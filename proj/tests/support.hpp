#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <string_view>

#include "rstar/types.hpp"

namespace rstar::testing {

// Maps '$' to the sentinel byte so examples read like the usual notation.
inline SymbolString dollar(std::string_view s) {
    SymbolString out;
    for (char c : s) {
        out.push_back(c == '$' ? kSentinel : static_cast<Symbol>(c));
    }
    return out;
}

inline std::string alphabet(std::size_t sigma) {
    if (sigma == 2) {
        return "ab";
    }
    if (sigma == 4) {
        return "ACGT";
    }
    return std::string("abcdefghijklmnopqrstuvwxyz").substr(0, sigma);
}

inline std::string random_text(std::mt19937_64& rng, std::size_t length, std::string_view letters) {
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    std::string s(length, ' ');
    for (auto& c : s) {
        c = letters[pick(rng)];
    }
    return s;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace rstar::testing
