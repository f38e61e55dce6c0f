#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rstar/suffix_structures.hpp"
#include "rstar/types.hpp"

namespace rstar {

// One LZ77 phrase: copy_len symbols copied from source_start (possibly
// overlapping the phrase itself), then one explicit symbol.
struct Phrase {
    std::size_t start = 0;
    std::size_t copy_len = 0;
    std::size_t source_start = 0;  // 0 when copy_len == 0
    Symbol explicit_char = 0;

    // Position of the explicit symbol, i.e. the phrase boundary.
    [[nodiscard]] std::size_t end() const { return start + copy_len; }

    friend bool operator==(const Phrase&, const Phrase&) = default;
};

using PhraseList = std::vector<Phrase>;

// Greedy factorization: each phrase copies the longest prefix of the rest of
// the text that also starts at an earlier position (leftmost such source),
// then takes one explicit symbol.
PhraseList parse(const Text& text);

// Same, reusing a suffix array already built for text.
PhraseList parse(const Text& text, std::span<const std::size_t> sa);

// Rebuilds the text symbol by symbol. Throws std::invalid_argument on
// phrases that do not tile the text or reference a non-earlier source.
Text decode(std::span<const Phrase> phrases);

// Phrase ends b with b < n; the final phrase end n has no following suffix.
std::vector<std::size_t> boundaries(std::span<const Phrase> phrases);

}  // namespace rstar
