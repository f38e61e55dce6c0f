#include "rstar/rstar_index.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace rstar {

namespace {

Symbol symbol_of(char c) { return static_cast<Symbol>(static_cast<unsigned char>(c)); }

struct SplitRect {
    std::size_t split;  // pattern split after P[split]
    Rect rect;
};

std::vector<SaInterval> prefix_ranges(const RunLengthBWT& mirror_bwt, std::string_view pattern) {
    std::vector<SaInterval> out;
    out.reserve(pattern.size());
    SaInterval iv = mirror_bwt.full_interval();
    for (char c : pattern) {
        iv = mirror_bwt.backward_step(iv, symbol_of(c));
        out.push_back(iv);
    }
    return out;
}

std::vector<SaInterval> suffix_ranges(const RunLengthBWT& text_bwt, std::string_view pattern) {
    const std::size_t m = pattern.size();
    std::vector<SaInterval> out(m);
    SaInterval iv = text_bwt.full_interval();
    out[m - 1] = iv;
    for (std::size_t i = m - 1; i >= 1; --i) {
        iv = text_bwt.backward_step(iv, symbol_of(pattern[i]));
        out[i - 1] = iv;
    }
    return out;
}

// Boundary-grid rectangles of the splits whose two halves both occur next to
// some boundary.
std::vector<SplitRect> split_rects(const PhraseStructures& ps, const RunLengthBWT& text_bwt,
                                   const RunLengthBWT& mirror_bwt, std::string_view pattern) {
    const auto prefixes = prefix_ranges(mirror_bwt, pattern);
    const auto suffixes = suffix_ranges(text_bwt, pattern);
    std::vector<SplitRect> out;
    for (std::size_t i = 1; i <= pattern.size(); ++i) {
        if (prefixes[i - 1].empty()) {
            break;
        }
        const Interval xs = ps.prefix_marks.project_interval(prefixes[i - 1]);
        const Interval ys = ps.suffix_marks.project_interval(suffixes[i - 1]);
        if (!xs.empty() && !ys.empty()) {
            out.push_back({i, Rect{xs.lo, xs.hi, ys.lo, ys.hi}});
        }
    }
    return out;
}

std::vector<std::size_t> primary_starts(const PhraseStructures& ps, const RunLengthBWT& text_bwt,
                                        const RunLengthBWT& mirror_bwt, std::string_view pattern) {
    std::set<std::size_t> starts;
    for (const auto& [split, rect] : split_rects(ps, text_bwt, mirror_bwt, pattern)) {
        for (const GridPoint& p : ps.boundary_grid.report_rect(rect)) {
            starts.insert(p.sat - split + 1);
        }
    }
    return {starts.begin(), starts.end()};
}

std::optional<std::size_t> leftmost_start(const PhraseStructures& ps, const RunLengthBWT& text_bwt,
                                          const RunLengthBWT& mirror_bwt, std::string_view pattern) {
    std::optional<std::size_t> best;
    for (const auto& [split, rect] : split_rects(ps, text_bwt, mirror_bwt, pattern)) {
        if (auto b = ps.boundary_grid.range_min_rect(rect)) {
            const std::size_t start = *b - split + 1;
            best = best ? std::min(*best, start) : start;
        }
    }
    return best;
}

PhraseStructures build_structures(const Text& text, std::span<const std::size_t> sa,
                                  std::span<const std::size_t> isa, std::span<const std::size_t> mirror_isa) {
    const std::size_t n = text.size();
    const PhraseList phrases = parse(text, sa);
    const auto bounds = boundaries(phrases);

    std::vector<std::size_t> suffix_ranks;
    std::vector<std::size_t> prefix_ranks;
    suffix_ranks.reserve(bounds.size());
    prefix_ranks.reserve(bounds.size());
    for (std::size_t b : bounds) {
        suffix_ranks.push_back(isa[b]);              // suffix starting at b + 1
        prefix_ranks.push_back(mirror_isa[n - b - 1]);  // mirror suffix starting at n - b
    }
    std::sort(suffix_ranks.begin(), suffix_ranks.end());
    std::sort(prefix_ranks.begin(), prefix_ranks.end());

    PhraseStructures ps;
    ps.phrase_count = phrases.size();
    ps.suffix_marks = SparseBits(suffix_ranks, n);
    ps.prefix_marks = SparseBits(prefix_ranks, n);

    std::vector<GridPoint> points;
    points.reserve(bounds.size());
    for (std::size_t b : bounds) {
        points.push_back({ps.prefix_marks.rank1(mirror_isa[n - b - 1]), ps.suffix_marks.rank1(isa[b]), b});
    }
    ps.boundary_grid = ReportGrid(std::move(points));

    std::vector<GridPoint> sources;
    for (const Phrase& ph : phrases) {
        if (ph.copy_len > 0) {
            sources.push_back({ph.source_start, ph.source_start + ph.copy_len - 1, ph.start});
        }
    }
    ps.source_grid = DominanceGrid(std::move(sources));
    return ps;
}

}  // namespace

void validate_pattern(std::string_view pattern) {
    if (pattern.empty()) {
        throw std::invalid_argument("pattern must be non-empty");
    }
    if (pattern.find('\0') != std::string_view::npos) {
        throw std::invalid_argument("pattern contains the reserved sentinel byte 0");
    }
}

RStarIndex RStarIndex::build(std::string_view text, BuildOptions options) {
    if (text.empty()) {
        throw std::invalid_argument("cannot index an empty text");
    }
    const Text fwd = Text::from_content(text);
    const Text rev = reverse_text(fwd);
    const SuffixArray fwd_sa = build_suffix_array(fwd);
    const SuffixArray rev_sa = build_suffix_array(rev);
    const auto fwd_isa = inverse_suffix_array(fwd_sa);
    const auto rev_isa = inverse_suffix_array(rev_sa);

    RStarIndex idx;
    idx.fwd_bwt_ = RunLengthBWT(bwt_from_sa(fwd, fwd_sa));
    idx.rev_bwt_ = RunLengthBWT(bwt_from_sa(rev, rev_sa));
    idx.forward_ = build_structures(fwd, fwd_sa, fwd_isa, rev_isa);
    if (options.with_rightmost) {
        idx.reverse_ = build_structures(rev, rev_sa, rev_isa, fwd_isa);
    }

    idx.meta_.n = fwd.size();
    idx.meta_.sigma = idx.fwd_bwt_.alphabet_size() - 1;
    idx.meta_.r = idx.fwd_bwt_.run_count();
    idx.meta_.r_rev = idx.rev_bwt_.run_count();
    idx.meta_.z = idx.forward_.phrase_count;
    idx.meta_.z_rev = idx.reverse_ ? idx.reverse_->phrase_count : 0;
    return idx;
}

std::size_t RStarIndex::count(std::string_view pattern) const {
    validate_pattern(pattern);
    SaInterval iv = fwd_bwt_.full_interval();
    for (auto it = pattern.rbegin(); it != pattern.rend() && !iv.empty(); ++it) {
        iv = fwd_bwt_.backward_step(iv, symbol_of(*it));
    }
    return iv.length();
}

std::vector<SaInterval> RStarIndex::prefix_intervals(std::string_view pattern) const {
    validate_pattern(pattern);
    return prefix_ranges(rev_bwt_, pattern);
}

std::vector<SaInterval> RStarIndex::suffix_intervals(std::string_view pattern) const {
    validate_pattern(pattern);
    return suffix_ranges(fwd_bwt_, pattern);
}

std::vector<std::size_t> RStarIndex::primary_occurrences(std::string_view pattern) const {
    validate_pattern(pattern);
    return primary_starts(forward_, fwd_bwt_, rev_bwt_, pattern);
}

std::vector<std::size_t> RStarIndex::secondary_closure(std::string_view pattern,
                                                       std::span<const std::size_t> primaries) const {
    validate_pattern(pattern);
    const std::size_t m = pattern.size();
    std::vector<std::size_t> found(primaries.begin(), primaries.end());
    for (std::size_t k = 0; k < found.size(); ++k) {
        const std::size_t s = found[k];
        for (const GridPoint& src : forward_.source_grid.report_dominating(s, s + m - 1)) {
            found.push_back(src.sat + (s - src.x));
        }
    }
    return found;
}

std::vector<std::size_t> RStarIndex::locate(std::string_view pattern) const {
    const auto primaries = primary_occurrences(pattern);
    auto all = secondary_closure(pattern, primaries);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

std::optional<std::size_t> RStarIndex::leftmost(std::string_view pattern) const {
    validate_pattern(pattern);
    return leftmost_start(forward_, fwd_bwt_, rev_bwt_, pattern);
}

std::optional<std::size_t> RStarIndex::rightmost(std::string_view pattern) const {
    validate_pattern(pattern);
    if (!reverse_) {
        throw UnsupportedQuery("rightmost queries need an index built with the reverse half");
    }
    const std::string reversed(pattern.rbegin(), pattern.rend());
    const auto mirrored = leftmost_start(*reverse_, rev_bwt_, fwd_bwt_, reversed);
    if (!mirrored) {
        return std::nullopt;
    }
    const std::size_t content = meta_.n - 1;
    return content - (*mirrored + pattern.size() - 1) + 1;
}

}  // namespace rstar
