#include "rstar/index_file.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <stdexcept>

namespace rstar {

namespace {

constexpr std::array<const char*, 4> kHalfTags{"SUF", "PRE", "BGR", "SGR"};

std::string tag_of(char direction, const char* suffix) { return std::string(1, direction) + suffix; }

void put_section(ByteWriter& out, const std::string& tag, const ByteWriter& payload) {
    out.put_bytes({reinterpret_cast<const std::uint8_t*>(tag.data()), 4});
    out.put_u64(payload.size());
    out.put_bytes(payload.bytes());
}

void put_structures(ByteWriter& out, char direction, const PhraseStructures& ps) {
    ByteWriter suf;
    ps.suffix_marks.serialize(suf);
    put_section(out, tag_of(direction, kHalfTags[0]), suf);
    ByteWriter pre;
    ps.prefix_marks.serialize(pre);
    put_section(out, tag_of(direction, kHalfTags[1]), pre);
    ByteWriter bgr;
    ps.boundary_grid.serialize(bgr);
    put_section(out, tag_of(direction, kHalfTags[2]), bgr);
    ByteWriter sgr;
    ps.source_grid.serialize(sgr);
    put_section(out, tag_of(direction, kHalfTags[3]), sgr);
}

struct ParsedFile {
    IndexFileLayout layout;
    std::map<std::string, std::span<const std::uint8_t>> payloads;
};

ParsedFile parse_container(std::span<const std::uint8_t> bytes) {
    ByteReader in(bytes);
    const auto magic = in.get_bytes(4);
    if (!std::equal(magic.begin(), magic.end(), kIndexMagic.begin(),
                    [](std::uint8_t a, char b) { return a == static_cast<std::uint8_t>(b); })) {
        throw FormatError("not an index file (bad magic)");
    }
    ParsedFile f;
    f.layout.version = in.get_u16();
    if (f.layout.version != kIndexVersion) {
        throw FormatError("unsupported index version " + std::to_string(f.layout.version));
    }
    f.layout.n = in.get_u64();
    f.layout.flags = in.get_u8();
    if ((f.layout.flags & ~kFlagReverseHalf) != 0) {
        throw FormatError("unknown index flags");
    }
    const std::uint32_t count = in.get_u32();
    for (std::uint32_t k = 0; k < count; ++k) {
        const auto tag_bytes = in.get_bytes(4);
        std::string tag(tag_bytes.begin(), tag_bytes.end());
        const std::uint64_t length = in.get_u64();
        if (length > in.remaining()) {
            throw FormatError("section " + tag + " is truncated");
        }
        const auto payload = in.get_bytes(static_cast<std::size_t>(length));
        if (!f.payloads.emplace(tag, payload).second) {
            throw FormatError("duplicate section " + tag);
        }
        f.layout.sections.push_back({tag, length});
    }
    in.expect_end("index file");
    return f;
}

template <typename T, typename Fn>
T read_section(const ParsedFile& f, const std::string& tag, Fn&& decode) {
    const auto it = f.payloads.find(tag);
    if (it == f.payloads.end()) {
        throw FormatError("missing section " + tag);
    }
    ByteReader in(it->second);
    T value = decode(in);
    in.expect_end("section " + tag);
    return value;
}

RunLengthBWT read_bwt(const ParsedFile& f, const std::string& tag, std::size_t n) {
    auto bwt = read_section<RunLengthBWT>(f, tag, [](ByteReader& in) { return RunLengthBWT::deserialize(in); });
    if (bwt.size() != n) {
        throw FormatError("section " + tag + " length disagrees with the header");
    }
    return bwt;
}

PhraseStructures read_structures(const ParsedFile& f, char direction, std::size_t n, std::size_t phrases) {
    PhraseStructures ps;
    ps.phrase_count = phrases;
    auto marks = [](ByteReader& in) { return SparseBits::deserialize(in); };
    ps.suffix_marks = read_section<SparseBits>(f, tag_of(direction, kHalfTags[0]), marks);
    ps.prefix_marks = read_section<SparseBits>(f, tag_of(direction, kHalfTags[1]), marks);
    ps.boundary_grid = read_section<ReportGrid>(f, tag_of(direction, kHalfTags[2]),
                                                [](ByteReader& in) { return ReportGrid::deserialize(in); });
    ps.source_grid = read_section<DominanceGrid>(f, tag_of(direction, kHalfTags[3]),
                                                 [](ByteReader& in) { return DominanceGrid::deserialize(in); });

    const std::size_t bounds = ps.boundary_grid.size();
    if (ps.suffix_marks.universe() != n || ps.prefix_marks.universe() != n || ps.suffix_marks.count() != bounds ||
        ps.prefix_marks.count() != bounds || bounds + 1 != phrases) {
        throw FormatError("phrase boundary structures are inconsistent");
    }
    for (const GridPoint& p : ps.boundary_grid.points()) {
        if (p.x < 1 || p.x > bounds || p.y < 1 || p.y > bounds || p.sat < 1 || p.sat >= n) {
            throw FormatError("boundary grid point out of range");
        }
    }
    for (const GridPoint& p : ps.source_grid.points()) {
        if (p.x < 1 || p.y < p.x || p.sat <= p.x || p.sat + (p.y - p.x) >= n) {
            throw FormatError("source grid point out of range");
        }
    }
    return ps;
}

}  // namespace

std::uint64_t IndexFileLayout::total_bytes() const {
    std::uint64_t total = kIndexHeaderBytes;
    for (const auto& s : sections) {
        total += s.record_bytes();
    }
    return total;
}

std::vector<std::uint8_t> serialize_index(const RStarIndex& index) {
    const IndexMetadata& meta = index.meta_;
    ByteWriter out;
    out.put_bytes({reinterpret_cast<const std::uint8_t*>(kIndexMagic.data()), kIndexMagic.size()});
    out.put_u16(kIndexVersion);
    out.put_u64(meta.n);
    out.put_u8(index.reverse_ ? kFlagReverseHalf : 0);
    out.put_u32(index.reverse_ ? 11 : 7);

    ByteWriter m;
    m.put_varint(meta.sigma);
    m.put_varint(meta.r);
    m.put_varint(meta.r_rev);
    m.put_varint(meta.z);
    m.put_varint(meta.z_rev);
    put_section(out, "META", m);

    ByteWriter fb;
    index.fwd_bwt_.serialize(fb);
    put_section(out, "FBWT", fb);
    ByteWriter rb;
    index.rev_bwt_.serialize(rb);
    put_section(out, "RBWT", rb);

    put_structures(out, 'F', index.forward_);
    if (index.reverse_) {
        put_structures(out, 'R', *index.reverse_);
    }
    return std::move(out).take();
}

IndexFileLayout inspect_index(std::span<const std::uint8_t> bytes) { return parse_container(bytes).layout; }

RStarIndex deserialize_index(std::span<const std::uint8_t> bytes) {
    const ParsedFile f = parse_container(bytes);
    const bool reverse = (f.layout.flags & kFlagReverseHalf) != 0;
    if (f.payloads.size() != (reverse ? 11U : 7U)) {
        throw FormatError("unexpected set of sections");
    }
    if (f.layout.n < 2 || f.layout.n > (std::uint64_t{1} << 56)) {
        throw FormatError("implausible text length in header");
    }
    const auto n = static_cast<std::size_t>(f.layout.n);

    RStarIndex idx;
    idx.meta_ = read_section<IndexMetadata>(f, "META", [&](ByteReader& in) {
        IndexMetadata meta;
        meta.n = n;
        meta.sigma = in.get_varint();
        meta.r = in.get_varint();
        meta.r_rev = in.get_varint();
        meta.z = in.get_varint();
        meta.z_rev = in.get_varint();
        return meta;
    });
    idx.fwd_bwt_ = read_bwt(f, "FBWT", n);
    idx.rev_bwt_ = read_bwt(f, "RBWT", n);
    if (idx.meta_.r != idx.fwd_bwt_.run_count() || idx.meta_.r_rev != idx.rev_bwt_.run_count() ||
        idx.meta_.sigma + 1 != idx.fwd_bwt_.alphabet_size()) {
        throw FormatError("metadata disagrees with the stored BWTs");
    }
    idx.forward_ = read_structures(f, 'F', n, idx.meta_.z);
    if (reverse) {
        idx.reverse_ = read_structures(f, 'R', n, idx.meta_.z_rev);
    } else if (idx.meta_.z_rev != 0) {
        throw FormatError("metadata lists a reverse parse that is not stored");
    }
    return idx;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw std::runtime_error("error reading " + path.string());
    }
    return bytes;
}

void write_index_file(const std::filesystem::path& path, const RStarIndex& index) {
    const auto bytes = serialize_index(index);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot create " + path.string());
    }
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw std::runtime_error("error writing " + path.string());
    }
}

RStarIndex read_index_file(const std::filesystem::path& path) { return deserialize_index(read_file_bytes(path)); }

}  // namespace rstar
