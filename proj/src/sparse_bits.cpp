#include "rstar/sparse_bits.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rstar {

namespace {

std::size_t select_in_word(std::uint64_t word, std::size_t k) {
    // k is 1-based and <= popcount(word)
    for (std::size_t i = 1; i < k; ++i) {
        word &= word - 1;
    }
    return static_cast<std::size_t>(std::countr_zero(word));
}

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BitVector::BitVector(std::vector<std::uint64_t> words, std::size_t length)
    : words_(std::move(words)), length_(length) {
    if (words_.size() != words_for(length_)) {
        throw std::invalid_argument("bitvector word count does not match length");
    }
    if (length_ % 64 != 0 && !words_.empty() && (words_.back() >> (length_ % 64)) != 0) {
        throw std::invalid_argument("bitvector has bits set past its length");
    }
    block_ones_.reserve(words_.size() / kWordsPerBlock + 1);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (w % kWordsPerBlock == 0) {
            block_ones_.push_back(ones_);
        }
        ones_ += static_cast<std::size_t>(std::popcount(words_[w]));
    }
}

std::size_t BitVector::rank1(std::size_t i) const {
    const std::size_t word = i / 64;
    const std::size_t block = word / kWordsPerBlock;
    std::size_t r = block < block_ones_.size() ? block_ones_[block] : ones_;
    for (std::size_t w = block * kWordsPerBlock; w < word; ++w) {
        r += static_cast<std::size_t>(std::popcount(words_[w]));
    }
    if (i % 64 != 0) {
        r += static_cast<std::size_t>(std::popcount(words_[word] & ((std::uint64_t{1} << (i % 64)) - 1)));
    }
    return r;
}

template <bool Ones>
std::size_t BitVector::select(std::size_t k) const {
    auto before_block = [&](std::size_t b) {
        const std::size_t ones = block_ones_[b];
        return Ones ? ones : b * kWordsPerBlock * 64 - ones;
    };
    // Last block whose preceding count is < k.
    std::size_t lo = 0;
    std::size_t hi = block_ones_.size();
    while (hi - lo > 1) {
        const std::size_t mid = (lo + hi) / 2;
        if (before_block(mid) < k) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    std::size_t remaining = k - before_block(lo);
    for (std::size_t w = lo * kWordsPerBlock; w < words_.size(); ++w) {
        const std::uint64_t word = Ones ? words_[w] : ~words_[w];
        const auto c = static_cast<std::size_t>(std::popcount(word));
        if (remaining <= c) {
            return w * 64 + select_in_word(word, remaining);
        }
        remaining -= c;
    }
    throw std::out_of_range("select beyond bitvector");
}

std::size_t BitVector::select1(std::size_t k) const { return select<true>(k); }
std::size_t BitVector::select0(std::size_t k) const { return select<false>(k); }

SparseBits::SparseBits(std::span<const std::size_t> positions, std::size_t universe)
    : universe_(universe), count_(positions.size()) {
    for (std::size_t k = 0; k < positions.size(); ++k) {
        if (positions[k] < 1 || positions[k] > universe) {
            throw std::invalid_argument("marked position outside 1..universe");
        }
        if (k > 0 && positions[k] <= positions[k - 1]) {
            throw std::invalid_argument("marked positions must be strictly increasing");
        }
    }
    if (count_ > 0 && universe_ / count_ > 1) {
        low_bits_ = static_cast<unsigned>(std::bit_width(universe_ / count_) - 1);
    }
    lower_.assign(words_for(count_ * low_bits_), 0);
    const std::size_t upper_bits = (universe_ >> low_bits_) + 1 + count_;
    std::vector<std::uint64_t> upper(words_for(upper_bits), 0);
    const std::uint64_t mask = (std::uint64_t{1} << low_bits_) - 1;
    for (std::size_t k = 0; k < count_; ++k) {
        const std::uint64_t v = positions[k];
        if (low_bits_ > 0) {
            const std::size_t bit = k * low_bits_;
            const std::uint64_t lo = v & mask;
            lower_[bit / 64] |= lo << (bit % 64);
            if (bit % 64 + low_bits_ > 64) {
                lower_[bit / 64 + 1] |= lo >> (64 - bit % 64);
            }
        }
        const std::size_t ub = (v >> low_bits_) + k;
        upper[ub / 64] |= std::uint64_t{1} << (ub % 64);
    }
    upper_ = BitVector(std::move(upper), upper_bits);
}

std::uint64_t SparseBits::low(std::size_t k) const {
    if (low_bits_ == 0) {
        return 0;
    }
    const std::size_t bit = k * low_bits_;
    std::uint64_t v = lower_[bit / 64] >> (bit % 64);
    if (bit % 64 + low_bits_ > 64) {
        v |= lower_[bit / 64 + 1] << (64 - bit % 64);
    }
    return v & ((std::uint64_t{1} << low_bits_) - 1);
}

std::size_t SparseBits::select1(std::size_t k) const {
    if (k < 1 || k > count_) {
        throw std::out_of_range("select1 rank out of range");
    }
    const std::size_t high = upper_.select1(k) - (k - 1);
    return (high << low_bits_) | low(k - 1);
}

std::size_t SparseBits::rank1(std::size_t i) const {
    if (i > universe_) {
        throw std::out_of_range("rank1 position beyond universe");
    }
    if (count_ == 0) {
        return 0;
    }
    const std::size_t h = i >> low_bits_;
    // Bucket h holds the marks with high part h: ranks [first, last).
    const std::size_t first = h == 0 ? 0 : upper_.select0(h) - (h - 1);
    const std::size_t last = upper_.select0(h + 1) - h;
    const std::uint64_t target = i & ((std::uint64_t{1} << low_bits_) - 1);
    std::size_t lo = first;
    std::size_t hi = last;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        if (low(mid) <= target) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo;
}

Interval SparseBits::project_interval(Interval iv) const {
    if (iv.empty()) {
        return kEmptyInterval;
    }
    const Interval out{rank1(iv.lo - 1) + 1, rank1(iv.hi)};
    return out.empty() ? kEmptyInterval : out;
}

std::vector<std::size_t> SparseBits::positions() const {
    std::vector<std::size_t> out;
    out.reserve(count_);
    std::size_t k = 0;
    for (std::size_t b = 0; b < upper_.size() && k < count_; ++b) {
        if (upper_.get(b)) {
            out.push_back(((b - k) << low_bits_) | low(k));
            ++k;
        }
    }
    return out;
}

void SparseBits::serialize(ByteWriter& out) const {
    out.put_varint(universe_);
    out.put_varint(count_);
    out.put_u8(static_cast<std::uint8_t>(low_bits_));
    for (std::uint64_t w : lower_) {
        out.put_u64(w);
    }
    for (std::uint64_t w : upper_.words()) {
        out.put_u64(w);
    }
}

SparseBits SparseBits::deserialize(ByteReader& in) {
    SparseBits b;
    b.universe_ = in.get_varint();
    b.count_ = in.get_varint();
    b.low_bits_ = in.get_u8();
    if (b.universe_ > (std::size_t{1} << 56) || b.count_ > b.universe_ || b.low_bits_ >= 64) {
        throw FormatError("sparse bitvector header is inconsistent");
    }
    unsigned expected_low = 0;
    if (b.count_ > 0 && b.universe_ / b.count_ > 1) {
        expected_low = static_cast<unsigned>(std::bit_width(b.universe_ / b.count_) - 1);
    }
    if (b.low_bits_ != expected_low) {
        throw FormatError("sparse bitvector low-bit width is inconsistent");
    }
    const std::size_t lower_words = words_for(b.count_ * b.low_bits_);
    const std::size_t upper_bits = (b.universe_ >> b.low_bits_) + 1 + b.count_;
    if (lower_words + words_for(upper_bits) > in.remaining() / 8) {
        throw FormatError("sparse bitvector payload truncated");
    }
    b.lower_.resize(lower_words);
    for (auto& w : b.lower_) {
        w = in.get_u64();
    }
    std::vector<std::uint64_t> upper(words_for(upper_bits));
    for (auto& w : upper) {
        w = in.get_u64();
    }
    try {
        b.upper_ = BitVector(std::move(upper), upper_bits);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    if (b.upper_.ones() != b.count_) {
        throw FormatError("sparse bitvector mark count mismatch");
    }
    const auto pos = b.positions();
    for (std::size_t k = 0; k < pos.size(); ++k) {
        if (pos[k] < 1 || pos[k] > b.universe_ || (k > 0 && pos[k] <= pos[k - 1])) {
            throw FormatError("sparse bitvector marks are not strictly increasing");
        }
    }
    return b;
}

}  // namespace rstar
