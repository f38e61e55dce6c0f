#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "rstar/byte_io.hpp"
#include "rstar/rstar_index.hpp"

// On-disk container:
//
//   "RSX1" | u16 version | u64 n | u8 flags | u32 section count
//   per section: 4-byte tag | u64 payload length | payload
//
// All integers little-endian. Flag bit 0 marks the reverse half. Payloads
// are owned by the module that wrote them.
namespace rstar {

inline constexpr std::array<char, 4> kIndexMagic{'R', 'S', 'X', '1'};
inline constexpr std::uint16_t kIndexVersion = 1;
inline constexpr std::uint8_t kFlagReverseHalf = 0x01;
inline constexpr std::size_t kIndexHeaderBytes = 4 + 2 + 8 + 1 + 4;
inline constexpr std::size_t kSectionOverheadBytes = 4 + 8;

struct SectionInfo {
    std::string tag;
    std::uint64_t payload_bytes = 0;

    [[nodiscard]] std::uint64_t record_bytes() const { return kSectionOverheadBytes + payload_bytes; }
};

struct IndexFileLayout {
    std::uint16_t version = 0;
    std::uint64_t n = 0;
    std::uint8_t flags = 0;
    std::vector<SectionInfo> sections;

    // header plus every section record
    [[nodiscard]] std::uint64_t total_bytes() const;
};

std::vector<std::uint8_t> serialize_index(const RStarIndex& index);

// Throws FormatError on any malformed, truncated, or inconsistent input.
RStarIndex deserialize_index(std::span<const std::uint8_t> bytes);

// Parses the header and section table only. Throws FormatError.
IndexFileLayout inspect_index(std::span<const std::uint8_t> bytes);

void write_index_file(const std::filesystem::path& path, const RStarIndex& index);
RStarIndex read_index_file(const std::filesystem::path& path);

// Whole-file read; throws std::runtime_error on I/O failure.
std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

}  // namespace rstar
