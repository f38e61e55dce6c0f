#include "rstar/rlbwt.hpp"

#include <stdexcept>

namespace rstar {

RunLengthBWT::RunLengthBWT(std::span<const Symbol> bwt) : n_(bwt.size()) {
    if (bwt.empty()) {
        throw std::invalid_argument("cannot build a run-length BWT from an empty sequence");
    }
    std::vector<std::size_t> starts;
    for (std::size_t i = 0; i < bwt.size(); ++i) {
        if (i == 0 || bwt[i] != bwt[i - 1]) {
            heads_.push_back(bwt[i]);
            starts.push_back(i + 1);
        }
    }
    starts_ = SparseBits(starts, n_);
    index_symbols();
}

void RunLengthBWT::index_symbols() {
    std::array<std::vector<std::size_t>, 256> runs;
    std::array<std::vector<std::size_t>, 256> cumulative;
    const auto starts = starts_.positions();
    std::array<std::size_t, 256> totals{};
    for (std::size_t k = 0; k < heads_.size(); ++k) {
        const std::size_t end = k + 1 < starts.size() ? starts[k + 1] : n_ + 1;
        const Symbol c = heads_[k];
        totals[c] += end - starts[k];
        runs[c].push_back(k + 1);
        cumulative[c].push_back(totals[c]);
    }
    before_[0] = 0;
    for (std::size_t c = 0; c < 256; ++c) {
        before_[c + 1] = before_[c] + totals[c];
        by_symbol_[c] = {SparseBits(runs[c], heads_.size()), SparseBits(cumulative[c], totals[c])};
    }
}

std::size_t RunLengthBWT::alphabet_size() const {
    std::size_t sigma = 0;
    for (std::size_t c = 0; c < 256; ++c) {
        sigma += symbol_count(static_cast<Symbol>(c)) > 0 ? 1 : 0;
    }
    return sigma;
}

std::size_t RunLengthBWT::rank(Symbol c, std::size_t i) const {
    if (i == 0) {
        return 0;
    }
    const SymbolRuns& sr = by_symbol_[c];
    if (sr.runs.count() == 0) {
        return 0;
    }
    const std::size_t run = starts_.rank1(i);
    const std::size_t earlier = sr.runs.rank1(run - 1);
    std::size_t r = earlier == 0 ? 0 : sr.cumulative.select1(earlier);
    if (heads_[run - 1] == c) {
        r += i - starts_.select1(run) + 1;
    }
    return r;
}

SaInterval RunLengthBWT::backward_step(SaInterval iv, Symbol c) const {
    if (iv.empty()) {
        return kEmptyInterval;
    }
    const SaInterval out{before_[c] + rank(c, iv.lo - 1) + 1, before_[c] + rank(c, iv.hi)};
    return out.empty() ? kEmptyInterval : out;
}

SymbolString RunLengthBWT::decompress() const {
    SymbolString out;
    out.reserve(n_);
    const auto starts = starts_.positions();
    for (std::size_t k = 0; k < heads_.size(); ++k) {
        const std::size_t end = k + 1 < starts.size() ? starts[k + 1] : n_ + 1;
        out.insert(out.end(), end - starts[k], heads_[k]);
    }
    return out;
}

void RunLengthBWT::serialize(ByteWriter& out) const {
    out.put_varint(n_);
    out.put_varint(heads_.size());
    out.put_bytes(heads_);
    starts_.serialize(out);
}

RunLengthBWT RunLengthBWT::deserialize(ByteReader& in) {
    RunLengthBWT b;
    b.n_ = in.get_varint();
    const std::size_t r = in.get_count(1);
    const auto heads = in.get_bytes(r);
    b.heads_.assign(heads.begin(), heads.end());
    b.starts_ = SparseBits::deserialize(in);
    if (r == 0 || b.starts_.universe() != b.n_ || b.starts_.count() != r || b.starts_.select1(1) != 1) {
        throw FormatError("run-length BWT runs are inconsistent");
    }
    for (std::size_t k = 1; k < r; ++k) {
        if (b.heads_[k] == b.heads_[k - 1]) {
            throw FormatError("run-length BWT has adjacent runs with equal heads");
        }
    }
    b.index_symbols();
    if (b.symbol_count(kSentinel) != 1) {
        throw FormatError("run-length BWT must hold exactly one sentinel");
    }
    return b;
}

}  // namespace rstar
