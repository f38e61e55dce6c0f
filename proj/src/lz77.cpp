#include "rstar/lz77.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace rstar {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Static range-minimum over a 1-based array.
class MinTree {
  public:
    explicit MinTree(std::span<const std::size_t> values) {
        while (leaves_ < values.size()) {
            leaves_ *= 2;
        }
        tree_.assign(2 * leaves_, kNone);
        std::copy(values.begin(), values.end(), tree_.begin() + static_cast<std::ptrdiff_t>(leaves_));
        for (std::size_t v = leaves_ - 1; v >= 1; --v) {
            tree_[v] = std::min(tree_[2 * v], tree_[2 * v + 1]);
        }
    }

    // Minimum of values[lo..hi] (1-based, inclusive); kNone if empty.
    [[nodiscard]] std::size_t min(std::size_t lo, std::size_t hi) const {
        std::size_t best = kNone;
        if (lo > hi) {
            return best;
        }
        std::size_t l = lo - 1 + leaves_;
        std::size_t r = hi + leaves_;
        while (l < r) {
            if (l & 1U) {
                best = std::min(best, tree_[l++]);
            }
            if (r & 1U) {
                best = std::min(best, tree_[--r]);
            }
            l /= 2;
            r /= 2;
        }
        return best;
    }

  private:
    std::size_t leaves_ = 1;
    std::vector<std::size_t> tree_;
};

std::size_t common_prefix(const Text& text, std::size_t earlier, std::size_t pos) {
    std::size_t len = 0;
    while (text.symbol(earlier + len) == text.symbol(pos + len)) {
        ++len;
    }
    return len;
}

}  // namespace

PhraseList parse(const Text& text) { return parse(text, build_suffix_array(text)); }

PhraseList parse(const Text& text, std::span<const std::size_t> sa) {
    const std::size_t n = text.size();
    const auto isa = inverse_suffix_array(sa);

    // lcp[k - 1] = lcp of the suffixes at ranks k - 1 and k (Kasai).
    std::vector<std::size_t> lcp(n, 0);
    for (std::size_t p = 1, h = 0; p <= n; ++p) {
        const std::size_t rank = isa[p - 1];
        if (rank > 1) {
            const std::size_t q = sa[rank - 2];
            while (text.symbol(p + h) == text.symbol(q + h) && text.symbol(p + h) != kSentinel) {
                ++h;
            }
            lcp[rank - 1] = h;
            h = h > 0 ? h - 1 : 0;
        } else {
            h = 0;
        }
    }

    // Nearest ranks above/below whose suffix starts earlier in the text.
    std::vector<std::size_t> prev_smaller(n + 1, kNone);
    std::vector<std::size_t> next_smaller(n + 1, kNone);
    std::vector<std::size_t> stack;
    for (std::size_t k = 1; k <= n; ++k) {
        while (!stack.empty() && sa[stack.back() - 1] > sa[k - 1]) {
            next_smaller[sa[stack.back() - 1]] = sa[k - 1];
            stack.pop_back();
        }
        prev_smaller[sa[k - 1]] = stack.empty() ? kNone : sa[stack.back() - 1];
        stack.push_back(k);
    }

    const MinTree lcp_min(lcp);
    const MinTree sa_min(sa);

    PhraseList phrases;
    for (std::size_t i = 1; i <= n;) {
        std::size_t len = 0;
        for (std::size_t cand : {prev_smaller[i], next_smaller[i]}) {
            if (cand != kNone) {
                len = std::max(len, common_prefix(text, cand, i));
            }
        }
        Phrase ph{i, len, 0, 0};
        if (len > 0) {
            // Widen the rank interval of suffixes sharing len symbols with i
            // and take its leftmost start.
            const std::size_t rank = isa[i - 1];
            std::size_t lo = 1;
            std::size_t hi = rank;
            while (lo < hi) {
                const std::size_t mid = (lo + hi) / 2;
                if (lcp_min.min(mid + 1, rank) >= len) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            const std::size_t first = lo;
            lo = rank;
            hi = n;
            while (lo < hi) {
                const std::size_t mid = (lo + hi + 1) / 2;
                if (lcp_min.min(rank + 1, mid) >= len) {
                    lo = mid;
                } else {
                    hi = mid - 1;
                }
            }
            ph.source_start = sa_min.min(first, lo);
        }
        ph.explicit_char = text.symbol(i + len);
        phrases.push_back(ph);
        i += len + 1;
    }
    return phrases;
}

Text decode(std::span<const Phrase> phrases) {
    SymbolString out;
    for (const Phrase& ph : phrases) {
        if (ph.start != out.size() + 1) {
            throw std::invalid_argument("phrases do not tile the text");
        }
        if (ph.copy_len > 0) {
            if (ph.source_start < 1 || ph.source_start >= ph.start) {
                throw std::invalid_argument("phrase source must start before the phrase");
            }
            for (std::size_t k = 0; k < ph.copy_len; ++k) {
                out.push_back(out[ph.source_start - 1 + k]);
            }
        }
        out.push_back(ph.explicit_char);
    }
    return Text::from_terminated(std::move(out));
}

std::vector<std::size_t> boundaries(std::span<const Phrase> phrases) {
    std::vector<std::size_t> out;
    if (phrases.empty()) {
        return out;
    }
    const std::size_t n = phrases.back().end();
    for (const Phrase& ph : phrases) {
        if (ph.end() < n) {
            out.push_back(ph.end());
        }
    }
    return out;
}

}  // namespace rstar
