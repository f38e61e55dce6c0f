#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rstar/byte_io.hpp"
#include "rstar/types.hpp"

namespace rstar {

// Plain bitvector with rank/select directories; the upper half of the
// Elias-Fano encoding below.
class BitVector {
  public:
    BitVector() = default;
    BitVector(std::vector<std::uint64_t> words, std::size_t length);

    [[nodiscard]] std::size_t size() const { return length_; }
    [[nodiscard]] bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    [[nodiscard]] std::size_t ones() const { return ones_; }

    // Ones in [0, i).
    [[nodiscard]] std::size_t rank1(std::size_t i) const;
    // 0-based position of the k-th one / zero, k >= 1.
    [[nodiscard]] std::size_t select1(std::size_t k) const;
    [[nodiscard]] std::size_t select0(std::size_t k) const;

    [[nodiscard]] std::span<const std::uint64_t> words() const { return words_; }

  private:
    static constexpr std::size_t kWordsPerBlock = 8;

    template <bool Ones>
    [[nodiscard]] std::size_t select(std::size_t k) const;

    std::vector<std::uint64_t> words_;
    std::vector<std::size_t> block_ones_;  // ones before each 512-bit block
    std::size_t length_ = 0;
    std::size_t ones_ = 0;
};

// Sorted set of marked positions in 1..universe, Elias-Fano encoded:
// about count * (2 + log(universe / count)) bits.
class SparseBits {
  public:
    SparseBits() = default;

    // positions must be strictly increasing and within 1..universe;
    // throws std::invalid_argument otherwise.
    SparseBits(std::span<const std::size_t> positions, std::size_t universe);

    [[nodiscard]] std::size_t universe() const { return universe_; }
    [[nodiscard]] std::size_t count() const { return count_; }

    // Marks <= i, for 0 <= i <= universe.
    [[nodiscard]] std::size_t rank1(std::size_t i) const;

    // Position of the k-th mark, 1 <= k <= count.
    [[nodiscard]] std::size_t select1(std::size_t k) const;

    [[nodiscard]] bool contains(std::size_t i) const { return i >= 1 && rank1(i) != rank1(i - 1); }

    // Ranks of the marks inside iv: [rank1(lo - 1) + 1, rank1(hi)].
    [[nodiscard]] Interval project_interval(Interval iv) const;

    [[nodiscard]] std::vector<std::size_t> positions() const;

    // Encoded payload size (lower and upper bit arrays).
    [[nodiscard]] std::size_t encoded_bytes() const { return 8 * (lower_.size() + upper_.words().size()); }

    void serialize(ByteWriter& out) const;
    static SparseBits deserialize(ByteReader& in);

  private:
    [[nodiscard]] std::uint64_t low(std::size_t k) const;

    std::size_t universe_ = 0;
    std::size_t count_ = 0;
    unsigned low_bits_ = 0;
    std::vector<std::uint64_t> lower_;
    BitVector upper_;
};

}  // namespace rstar
