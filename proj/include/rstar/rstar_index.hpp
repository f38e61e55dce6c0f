#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "rstar/grid.hpp"
#include "rstar/lz77.hpp"
#include "rstar/rlbwt.hpp"
#include "rstar/sparse_bits.hpp"
#include "rstar/suffix_structures.hpp"
#include "rstar/types.hpp"

namespace rstar {

// Raised when a query needs a part of the index that was not built.
class UnsupportedQuery : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

struct BuildOptions {
    bool with_rightmost = true;
};

// Phrase-derived structures for one parsing direction. For the forward half
// the "text" is T; for the reverse half it is reverse(T) and the two BWTs
// swap roles.
struct PhraseStructures {
    // Over the suffix array of the text: rank j is marked when the suffix at
    // SA[j] starts right after a phrase boundary.
    SparseBits suffix_marks;
    // Over the suffix array of the reversed text: marks the prefixes of the
    // text that end at a phrase boundary.
    SparseBits prefix_marks;
    // (co-lex rank of the prefix, lex rank of the following suffix, boundary).
    ReportGrid boundary_grid;
    // (source start, source end, phrase start), one per phrase with a copy.
    DominanceGrid source_grid;
    std::size_t phrase_count = 0;
};

struct IndexMetadata {
    std::size_t n = 0;      // text length including the sentinel
    std::size_t sigma = 0;  // distinct content symbols
    std::size_t r = 0;
    std::size_t r_rev = 0;
    std::size_t z = 0;
    std::size_t z_rev = 0;  // 0 when built without the reverse half

    [[nodiscard]] std::size_t r_star() const { return r + r_rev; }
};

// Locating index built from the run-length BWTs of T and reverse(T) plus the
// LZ77 phrase-boundary grids.
//
// Occurrences that contain a phrase boundary are found by splitting the
// pattern at every i in 1..m and querying the boundary grid with the
// co-lexicographic range of P[1..i] and the lexicographic range of
// P[i+1..m]. All other occurrences sit inside a phrase's copy and are
// recovered from an earlier occurrence through the source grid.
//
// Patterns must be non-empty and free of byte 0; queries throw
// std::invalid_argument otherwise. Immutable after construction.
class RStarIndex {
  public:
    // Throws std::invalid_argument on empty input or input containing byte 0.
    static RStarIndex build(std::string_view text, BuildOptions options = {});

    [[nodiscard]] const IndexMetadata& metadata() const { return meta_; }
    [[nodiscard]] bool has_rightmost() const { return reverse_.has_value(); }

    [[nodiscard]] const RunLengthBWT& forward_bwt() const { return fwd_bwt_; }
    [[nodiscard]] const RunLengthBWT& reverse_bwt() const { return rev_bwt_; }
    [[nodiscard]] const PhraseStructures& forward_structures() const { return forward_; }
    // Null when built without the reverse half.
    [[nodiscard]] const PhraseStructures* reverse_structures() const {
        return reverse_ ? &*reverse_ : nullptr;
    }

    [[nodiscard]] std::size_t count(std::string_view pattern) const;

    // Entry i - 1: SA(reverse(T)) interval of the suffixes starting with
    // reverse(P[1..i]), i.e. the prefixes of T ending with P[1..i].
    [[nodiscard]] std::vector<SaInterval> prefix_intervals(std::string_view pattern) const;

    // Entry i - 1: SA(T) interval of the suffixes starting with P[i+1..m];
    // entry m - 1 is the full range.
    [[nodiscard]] std::vector<SaInterval> suffix_intervals(std::string_view pattern) const;

    // Sorted starts of the occurrences containing a phrase boundary.
    [[nodiscard]] std::vector<std::size_t> primary_occurrences(std::string_view pattern) const;

    // primaries followed by every occurrence reachable through phrase
    // sources, in discovery order. Each occurrence appears once when
    // primaries is duplicate-free.
    [[nodiscard]] std::vector<std::size_t> secondary_closure(std::string_view pattern,
                                                             std::span<const std::size_t> primaries) const;

    // Sorted, duplicate-free starts of all occurrences.
    [[nodiscard]] std::vector<std::size_t> locate(std::string_view pattern) const;

    [[nodiscard]] std::optional<std::size_t> leftmost(std::string_view pattern) const;

    // Throws UnsupportedQuery when built without the reverse half.
    [[nodiscard]] std::optional<std::size_t> rightmost(std::string_view pattern) const;

  private:
    RStarIndex() = default;

    friend std::vector<std::uint8_t> serialize_index(const RStarIndex& index);
    friend RStarIndex deserialize_index(std::span<const std::uint8_t> bytes);

    IndexMetadata meta_;
    RunLengthBWT fwd_bwt_;
    RunLengthBWT rev_bwt_;
    PhraseStructures forward_;
    std::optional<PhraseStructures> reverse_;
};

// Throws std::invalid_argument for an empty pattern or one containing byte 0.
void validate_pattern(std::string_view pattern);

}  // namespace rstar
