#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rstar {

// Raised for any malformed or truncated serialized data.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Little-endian fixed-width and LEB128 writer.
class ByteWriter {
  public:
    void put_u8(std::uint8_t v) { buf_.push_back(v); }

    void put_u16(std::uint16_t v) { put_fixed(v, 2); }
    void put_u32(std::uint32_t v) { put_fixed(v, 4); }
    void put_u64(std::uint64_t v) { put_fixed(v, 8); }

    void put_varint(std::uint64_t v) {
        while (v >= 0x80) {
            buf_.push_back(static_cast<std::uint8_t>(v | 0x80));
            v >>= 7;
        }
        buf_.push_back(static_cast<std::uint8_t>(v));
    }

    void put_bytes(std::span<const std::uint8_t> bytes) {
        buf_.insert(buf_.end(), bytes.begin(), bytes.end());
    }

    [[nodiscard]] const std::vector<std::uint8_t>& bytes() const { return buf_; }
    [[nodiscard]] std::vector<std::uint8_t> take() && { return std::move(buf_); }
    [[nodiscard]] std::size_t size() const { return buf_.size(); }

  private:
    void put_fixed(std::uint64_t v, int width) {
        for (int i = 0; i < width; ++i) {
            buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    }

    std::vector<std::uint8_t> buf_;
};

// Bounds-checked reader; every read past the end throws FormatError.
class ByteReader {
  public:
    explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

    std::uint8_t get_u8() { return static_cast<std::uint8_t>(get_fixed(1)); }
    std::uint16_t get_u16() { return static_cast<std::uint16_t>(get_fixed(2)); }
    std::uint32_t get_u32() { return static_cast<std::uint32_t>(get_fixed(4)); }
    std::uint64_t get_u64() { return get_fixed(8); }

    std::uint64_t get_varint() {
        std::uint64_t v = 0;
        for (int shift = 0; shift < 64; shift += 7) {
            const std::uint8_t b = get_u8();
            v |= static_cast<std::uint64_t>(b & 0x7f) << shift;
            if ((b & 0x80) == 0) {
                return v;
            }
        }
        throw FormatError("varint too long");
    }

    std::span<const std::uint8_t> get_bytes(std::size_t count) {
        require(count);
        auto out = data_.subspan(pos_, count);
        pos_ += count;
        return out;
    }

    // Reads a count that must be satisfiable by the remaining bytes at
    // min_bytes_each, so corrupt lengths cannot trigger huge allocations.
    std::size_t get_count(std::size_t min_bytes_each) {
        const std::uint64_t c = get_varint();
        if (min_bytes_each > 0 && c > remaining() / min_bytes_each) {
            throw FormatError("element count exceeds available data");
        }
        return static_cast<std::size_t>(c);
    }

    [[nodiscard]] std::size_t remaining() const { return data_.size() - pos_; }
    [[nodiscard]] bool at_end() const { return pos_ == data_.size(); }

    void expect_end(const std::string& what) const {
        if (!at_end()) {
            throw FormatError("trailing bytes in " + what);
        }
    }

  private:
    void require(std::size_t count) const {
        if (count > remaining()) {
            throw FormatError("unexpected end of data");
        }
    }

    std::uint64_t get_fixed(int width) {
        require(static_cast<std::size_t>(width));
        std::uint64_t v = 0;
        for (int i = 0; i < width; ++i) {
            v |= static_cast<std::uint64_t>(data_[pos_ + i]) << (8 * i);
        }
        pos_ += static_cast<std::size_t>(width);
        return v;
    }

    std::span<const std::uint8_t> data_;
    std::size_t pos_ = 0;
};

}  // namespace rstar
