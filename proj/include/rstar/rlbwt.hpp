#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "rstar/byte_io.hpp"
#include "rstar/sparse_bits.hpp"
#include "rstar/types.hpp"

namespace rstar {

// Run-length compressed BWT. Run boundaries and the per-symbol run tables are
// Elias-Fano sets, so the structure takes O(r log(n/r)) bits.
//
// rank(c, i) locates the run holding i, counts the c-runs before it, and
// reads their cumulative length: O(log r) per query.
class RunLengthBWT {
  public:
    RunLengthBWT() = default;

    // Throws std::invalid_argument on empty input.
    explicit RunLengthBWT(std::span<const Symbol> bwt);

    [[nodiscard]] std::size_t size() const { return n_; }
    [[nodiscard]] std::size_t run_count() const { return heads_.size(); }

    [[nodiscard]] std::span<const Symbol> run_heads() const { return heads_; }
    [[nodiscard]] std::vector<std::size_t> run_starts() const { return starts_.positions(); }

    // C[c]: number of symbols strictly smaller than c.
    [[nodiscard]] std::size_t count_before(Symbol c) const { return before_[c]; }
    [[nodiscard]] std::size_t symbol_count(Symbol c) const { return before_[c + 1] - before_[c]; }

    // Distinct symbols present, the sentinel included.
    [[nodiscard]] std::size_t alphabet_size() const;

    // Symbol at 1-based position i.
    [[nodiscard]] Symbol at(std::size_t i) const { return heads_[starts_.rank1(i) - 1]; }

    // Occurrences of c in positions 1..i, 0 <= i <= n.
    [[nodiscard]] std::size_t rank(Symbol c, std::size_t i) const;

    // Interval of suffixes prefixed by c followed by the strings of iv.
    [[nodiscard]] SaInterval backward_step(SaInterval iv, Symbol c) const;

    [[nodiscard]] SaInterval full_interval() const { return {1, n_}; }

    [[nodiscard]] SymbolString decompress() const;

    void serialize(ByteWriter& out) const;
    static RunLengthBWT deserialize(ByteReader& in);

  private:
    struct SymbolRuns {
        SparseBits runs;        // 1-based indices of the runs headed by this symbol
        SparseBits cumulative;  // running total of their lengths
    };

    void index_symbols();

    std::size_t n_ = 0;
    SymbolString heads_;
    SparseBits starts_;
    std::array<SymbolRuns, 256> by_symbol_;
    std::array<std::size_t, 257> before_{};
};

}  // namespace rstar
