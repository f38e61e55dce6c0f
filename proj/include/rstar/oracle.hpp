#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rstar/grid.hpp"
#include "rstar/lz77.hpp"
#include "rstar/suffix_structures.hpp"

// Brute-force reference implementations. Quadratic or worse; meant for
// cross-checking on small inputs.
namespace rstar::oracle {

// Every s with text[s .. s+m-1] == pattern, 1-based and increasing. Empty
// for an empty pattern.
std::vector<std::size_t> naive_locate(std::string_view text, std::string_view pattern);

// Suffix array by direct comparison sort.
SuffixArray naive_suffix_array(const Text& text);

// Greedy LZ77 by trying every earlier start; ties go to the leftmost.
PhraseList naive_parse(const Text& text);

std::vector<GridPoint> naive_rect_filter(std::span<const GridPoint> points, const Rect& rect);

// Points with x <= s and y >= e.
std::vector<GridPoint> naive_dominance_filter(std::span<const GridPoint> points, std::size_t s, std::size_t e);

}  // namespace rstar::oracle
