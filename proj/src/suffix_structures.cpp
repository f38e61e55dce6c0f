#include "rstar/suffix_structures.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace rstar {

Text Text::from_content(std::string_view content) {
    return from_content(std::span<const Symbol>(reinterpret_cast<const Symbol*>(content.data()), content.size()));
}

Text Text::from_content(std::span<const Symbol> content) {
    if (std::find(content.begin(), content.end(), kSentinel) != content.end()) {
        throw std::invalid_argument("text contains the reserved sentinel byte 0");
    }
    SymbolString bytes(content.begin(), content.end());
    bytes.push_back(kSentinel);
    return Text(std::move(bytes));
}

Text Text::from_terminated(SymbolString bytes) {
    if (bytes.empty() || bytes.back() != kSentinel) {
        throw std::invalid_argument("text must end with the sentinel");
    }
    if (std::find(bytes.begin(), bytes.end() - 1, kSentinel) != bytes.end() - 1) {
        throw std::invalid_argument("sentinel occurs before the end of the text");
    }
    return Text(std::move(bytes));
}

namespace {

using Index = std::int64_t;

// SA-IS over s[0..n), where s[n-1] == 0 is unique and minimal and all values
// are in [0, alphabet). Returns 0-based suffix starts.
std::vector<Index> sais(std::span<const Index> s, Index alphabet) {
    const auto n = static_cast<Index>(s.size());
    std::vector<Index> sa(static_cast<std::size_t>(n), -1);
    if (n == 1) {
        sa[0] = 0;
        return sa;
    }

    // true = S-type
    std::vector<bool> stype(static_cast<std::size_t>(n));
    stype[n - 1] = true;
    for (Index i = n - 2; i >= 0; --i) {
        stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
    }
    auto is_lms = [&](Index i) { return i > 0 && stype[i] && !stype[i - 1]; };

    std::vector<Index> bucket_size(static_cast<std::size_t>(alphabet), 0);
    for (Index c : s) {
        ++bucket_size[c];
    }
    std::vector<Index> heads(bucket_size.size());
    std::vector<Index> tails(bucket_size.size());
    auto reset_buckets = [&] {
        Index sum = 0;
        for (std::size_t c = 0; c < bucket_size.size(); ++c) {
            heads[c] = sum;
            sum += bucket_size[c];
            tails[c] = sum;
        }
    };

    // Places the LMS suffixes (in the given order) at bucket tails and
    // induces L-type then S-type suffixes.
    auto induce = [&](std::span<const Index> lms) {
        std::fill(sa.begin(), sa.end(), -1);
        reset_buckets();
        for (auto it = lms.rbegin(); it != lms.rend(); ++it) {
            sa[--tails[s[*it]]] = *it;
        }
        reset_buckets();
        for (Index k = 0; k < n; ++k) {
            const Index j = sa[k] - 1;
            if (sa[k] > 0 && !stype[j]) {
                sa[heads[s[j]]++] = j;
            }
        }
        for (Index k = n - 1; k >= 0; --k) {
            const Index j = sa[k] - 1;
            if (sa[k] > 0 && stype[j]) {
                sa[--tails[s[j]]] = j;
            }
        }
    };

    std::vector<Index> lms_positions;
    for (Index i = 1; i < n; ++i) {
        if (is_lms(i)) {
            lms_positions.push_back(i);
        }
    }
    induce(lms_positions);

    // Name LMS substrings in sorted order.
    std::vector<Index> sorted_lms;
    sorted_lms.reserve(lms_positions.size());
    for (Index p : sa) {
        if (is_lms(p)) {
            sorted_lms.push_back(p);
        }
    }
    std::vector<Index> name_of(static_cast<std::size_t>(n / 2 + 1), -1);
    Index names = 0;
    Index prev = -1;
    for (Index p : sorted_lms) {
        bool differs = prev < 0;
        for (Index d = 0; !differs; ++d) {
            if (s[p + d] != s[prev + d] || stype[p + d] != stype[prev + d]) {
                differs = true;
            } else if (d > 0 && (is_lms(p + d) || is_lms(prev + d))) {
                differs = !(is_lms(p + d) && is_lms(prev + d));
                break;
            }
        }
        if (differs) {
            ++names;
        }
        name_of[p / 2] = names - 1;
        prev = p;
    }

    std::vector<Index> reduced;
    reduced.reserve(lms_positions.size());
    for (Index p : lms_positions) {
        reduced.push_back(name_of[p / 2]);
    }

    std::vector<Index> reduced_sa;
    if (names < static_cast<Index>(reduced.size())) {
        reduced_sa = sais(reduced, names);
    } else {
        reduced_sa.assign(reduced.size(), 0);
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            reduced_sa[reduced[i]] = static_cast<Index>(i);
        }
    }

    for (std::size_t k = 0; k < reduced_sa.size(); ++k) {
        sorted_lms[k] = lms_positions[reduced_sa[k]];
    }
    induce(sorted_lms);
    return sa;
}

}  // namespace

SuffixArray build_suffix_array(const Text& text) {
    const auto bytes = text.bytes();
    std::vector<Index> s(bytes.begin(), bytes.end());
    const auto order = sais(s, 256);
    SuffixArray sa(order.size());
    std::transform(order.begin(), order.end(), sa.begin(), [](Index p) { return static_cast<std::size_t>(p) + 1; });
    return sa;
}

std::vector<std::size_t> inverse_suffix_array(std::span<const std::size_t> sa) {
    std::vector<std::size_t> isa(sa.size());
    for (std::size_t k = 0; k < sa.size(); ++k) {
        isa[sa[k] - 1] = k + 1;
    }
    return isa;
}

SymbolString bwt_from_sa(const Text& text, std::span<const std::size_t> sa) {
    SymbolString bwt(sa.size());
    for (std::size_t k = 0; k < sa.size(); ++k) {
        bwt[k] = sa[k] == 1 ? text.symbol(text.size()) : text.symbol(sa[k] - 1);
    }
    return bwt;
}

Text reverse_text(const Text& text) {
    const auto content = text.bytes().first(text.size() - 1);
    SymbolString reversed(content.rbegin(), content.rend());
    reversed.push_back(kSentinel);
    return Text::from_terminated(std::move(reversed));
}

}  // namespace rstar
