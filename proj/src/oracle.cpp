#include "rstar/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace rstar::oracle {

std::vector<std::size_t> naive_locate(std::string_view text, std::string_view pattern) {
    std::vector<std::size_t> out;
    if (pattern.empty() || pattern.size() > text.size()) {
        return out;
    }
    for (std::size_t s = 0; s + pattern.size() <= text.size(); ++s) {
        if (text.compare(s, pattern.size(), pattern) == 0) {
            out.push_back(s + 1);
        }
    }
    return out;
}

SuffixArray naive_suffix_array(const Text& text) {
    const auto bytes = text.bytes();
    SuffixArray sa(text.size());
    std::iota(sa.begin(), sa.end(), std::size_t{1});
    std::sort(sa.begin(), sa.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(bytes.begin() + static_cast<std::ptrdiff_t>(a - 1), bytes.end(),
                                            bytes.begin() + static_cast<std::ptrdiff_t>(b - 1), bytes.end());
    });
    return sa;
}

PhraseList naive_parse(const Text& text) {
    const std::size_t n = text.size();
    PhraseList phrases;
    for (std::size_t i = 1; i <= n;) {
        std::size_t best_len = 0;
        std::size_t best_src = 0;
        for (std::size_t j = 1; j < i; ++j) {
            std::size_t len = 0;
            while (i + len < n && text.symbol(j + len) == text.symbol(i + len)) {
                ++len;
            }
            if (len > best_len) {
                best_len = len;
                best_src = j;
            }
        }
        phrases.push_back({i, best_len, best_src, text.symbol(i + best_len)});
        i += best_len + 1;
    }
    return phrases;
}

std::vector<GridPoint> naive_rect_filter(std::span<const GridPoint> points, const Rect& rect) {
    std::vector<GridPoint> out;
    for (const auto& p : points) {
        if (rect.contains(p)) {
            out.push_back(p);
        }
    }
    return out;
}

std::vector<GridPoint> naive_dominance_filter(std::span<const GridPoint> points, std::size_t s, std::size_t e) {
    std::vector<GridPoint> out;
    for (const auto& p : points) {
        if (p.x <= s && p.y >= e) {
            out.push_back(p);
        }
    }
    return out;
}

}  // namespace rstar::oracle
