#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "rstar/types.hpp"

namespace rstar {

// A byte text terminated by a unique sentinel (byte 0). Positions are 1-based:
// symbol(1) is the first byte and symbol(size()) is the sentinel.
class Text {
  public:
    Text() : bytes_{kSentinel} {}

    // Appends the sentinel. Throws std::invalid_argument if content holds byte 0.
    static Text from_content(std::string_view content);
    static Text from_content(std::span<const Symbol> content);

    // Takes bytes that already end with the sentinel; validates that it is
    // the only zero byte.
    static Text from_terminated(SymbolString bytes);

    [[nodiscard]] std::size_t size() const { return bytes_.size(); }
    [[nodiscard]] Symbol symbol(std::size_t pos) const { return bytes_[pos - 1]; }
    [[nodiscard]] std::span<const Symbol> bytes() const { return bytes_; }

    // Text without the sentinel.
    [[nodiscard]] std::string_view content() const {
        return {reinterpret_cast<const char*>(bytes_.data()), bytes_.size() - 1};
    }

    friend bool operator==(const Text&, const Text&) = default;

  private:
    explicit Text(SymbolString bytes) : bytes_(std::move(bytes)) {}

    SymbolString bytes_;
};

// sa[k] is the 1-based start of the (k+1)-th smallest suffix.
using SuffixArray = std::vector<std::size_t>;

// Induced-sorting (SA-IS) construction, linear time.
SuffixArray build_suffix_array(const Text& text);

// isa[p - 1] is the 1-based rank of the suffix starting at p.
std::vector<std::size_t> inverse_suffix_array(std::span<const std::size_t> sa);

// bwt[k] = text[sa[k] - 1], wrapping text[0] to the sentinel.
SymbolString bwt_from_sa(const Text& text, std::span<const std::size_t> sa);

// Reverses the content and keeps the sentinel last.
Text reverse_text(const Text& text);

}  // namespace rstar
