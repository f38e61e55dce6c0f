#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "rstar/index_file.hpp"
#include "rstar/oracle.hpp"
#include "rstar/rstar_index.hpp"

namespace rstar::cli {

namespace {

// Failure that maps to a specific exit code.
struct ExitError {
    int code;
    std::string message;
};

std::string as_string(const std::vector<std::uint8_t>& bytes) { return {bytes.begin(), bytes.end()}; }

std::vector<std::string> split_lines(const std::string& data) {
    std::vector<std::string> lines;
    std::size_t begin = 0;
    while (begin < data.size()) {
        const std::size_t end = data.find('\n', begin);
        if (end == std::string::npos) {
            lines.push_back(data.substr(begin));
            break;
        }
        lines.push_back(data.substr(begin, end - begin));
        begin = end + 1;
    }
    return lines;
}

RStarIndex load(const std::string& path) {
    try {
        return read_index_file(path);
    } catch (const FormatError& e) {
        throw ExitError{kDataError, "malformed index " + path + ": " + e.what()};
    }
}

struct BuildArgs {
    std::string input;
    std::string output;
    bool no_rightmost = false;
};

int cmd_build(const BuildArgs& args, std::ostream& out) {
    const std::string text = as_string(read_file_bytes(args.input));
    const auto index = RStarIndex::build(text, BuildOptions{.with_rightmost = !args.no_rightmost});
    write_index_file(args.output, index);
    const auto& m = index.metadata();
    out << "n=" << m.n << " r=" << m.r << " r_rev=" << m.r_rev << " z=" << m.z << " z_rev=" << m.z_rev
        << " bytes=" << std::filesystem::file_size(args.output) << '\n';
    return kOk;
}

struct QueryArgs {
    std::string index;
    std::string mode;
    std::optional<std::string> pattern;
    std::optional<std::string> patterns_file;
    std::optional<std::string> verify;
};

std::string format_position(const std::optional<std::size_t>& p) { return p ? std::to_string(*p) : "-"; }

int cmd_query(const QueryArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<std::string> patterns;
    if (args.pattern) {
        patterns.push_back(*args.pattern);
    } else {
        patterns = split_lines(as_string(read_file_bytes(*args.patterns_file)));
    }
    for (const auto& p : patterns) {
        validate_pattern(p);
    }

    const RStarIndex index = load(args.index);
    if (args.mode == "rightmost" && !index.has_rightmost()) {
        throw ExitError{kDataError, "index was built without the reverse half; rightmost is unavailable"};
    }

    std::optional<std::string> text;
    if (args.verify) {
        text = as_string(read_file_bytes(*args.verify));
        if (text->size() + 1 != index.metadata().n) {
            throw ExitError{kDataError, "verification text does not match the index length"};
        }
    }

    std::size_t mismatches = 0;
    for (const auto& p : patterns) {
        std::string line;
        std::string expected;
        const auto truth = text ? oracle::naive_locate(*text, p) : std::vector<std::size_t>{};
        if (args.mode == "count") {
            line = std::to_string(index.count(p));
            expected = std::to_string(truth.size());
        } else if (args.mode == "locate") {
            auto render = [](const std::vector<std::size_t>& occ) {
                std::string s = std::to_string(occ.size()) + '\t';
                for (std::size_t k = 0; k < occ.size(); ++k) {
                    s += (k > 0 ? " " : "") + std::to_string(occ[k]);
                }
                return s;
            };
            line = render(index.locate(p));
            expected = render(truth);
        } else if (args.mode == "leftmost") {
            line = format_position(index.leftmost(p));
            expected = truth.empty() ? "-" : std::to_string(truth.front());
        } else {
            line = format_position(index.rightmost(p));
            expected = truth.empty() ? "-" : std::to_string(truth.back());
        }
        out << line << '\n';
        if (text && line != expected) {
            ++mismatches;
            err << "verification mismatch for pattern \"" << p << "\": index gave \"" << line
                << "\", expected \"" << expected << "\"\n";
        }
    }
    if (mismatches > 0) {
        err << mismatches << " of " << patterns.size() << " answers failed verification\n";
        return kVerifyMismatch;
    }
    return kOk;
}

struct StatsArgs {
    std::string index;
    bool json = false;
};

int cmd_stats(const StatsArgs& args, std::ostream& out) {
    const auto bytes = read_file_bytes(args.index);
    IndexFileLayout layout;
    std::optional<RStarIndex> index;
    try {
        layout = inspect_index(bytes);
        index.emplace(deserialize_index(bytes));
    } catch (const FormatError& e) {
        throw ExitError{kDataError, "malformed index " + args.index + ": " + e.what()};
    }
    const auto& m = index->metadata();

    nlohmann::ordered_json j;
    j["n"] = m.n;
    j["sigma"] = m.sigma;
    j["r"] = m.r;
    j["r_rev"] = m.r_rev;
    j["r_star"] = m.r_star();
    j["z"] = m.z;
    j["z_rev"] = m.z_rev;
    j["reverse_half"] = index->has_rightmost();
    j["header_bytes"] = kIndexHeaderBytes;
    for (const auto& s : layout.sections) {
        j["section_" + s.tag + "_bytes"] = s.record_bytes();
    }
    j["file_bytes"] = bytes.size();
    std::size_t aux = index->forward_structures().boundary_grid.aux_memory_bytes();
    if (const auto* rev = index->reverse_structures()) {
        aux += rev->boundary_grid.aux_memory_bytes();
    }
    j["grid_query_tables_memory_bytes"] = aux;

    if (args.json) {
        out << j.dump() << '\n';
    } else {
        for (const auto& [key, value] : j.items()) {
            out << key << ": " << value.dump() << '\n';
        }
    }
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Compressed locating index over run-length BWTs and LZ77 phrase grids", "rstar"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "Build an index file from a text file");
    build->add_option("--input", build_args.input, "Text file to index")->required()->check(CLI::ExistingFile);
    build->add_option("--output", build_args.output, "Index file to write")->required();
    build->add_flag("--no-rightmost", build_args.no_rightmost, "Skip the reverse half (disables rightmost)");

    QueryArgs query_args;
    auto* query = app.add_subcommand("query", "Answer pattern queries against an index");
    query->add_option("--index", query_args.index, "Index file")->required()->check(CLI::ExistingFile);
    query->add_option("--mode", query_args.mode, "count, locate, leftmost or rightmost")
        ->required()
        ->check(CLI::IsMember({"count", "locate", "leftmost", "rightmost"}));
    auto* single = query->add_option("--pattern", query_args.pattern, "A single pattern");
    auto* many = query->add_option("--patterns-file", query_args.patterns_file, "One pattern per line")
                     ->check(CLI::ExistingFile);
    single->excludes(many);
    query->add_option("--verify", query_args.verify, "Original text; cross-check answers by brute force")
        ->check(CLI::ExistingFile);

    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "Print index statistics and section sizes");
    stats->add_option("--index", stats_args.index, "Index file")->required()->check(CLI::ExistingFile);
    stats->add_flag("--json", stats_args.json, "Emit a flat JSON object");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (build->parsed()) {
            return cmd_build(build_args, out);
        }
        if (query->parsed()) {
            if (!query_args.pattern && !query_args.patterns_file) {
                err << "query: one of --pattern or --patterns-file is required\n";
                return kUsageError;
            }
            return cmd_query(query_args, out, err);
        }
        return cmd_stats(stats_args, out);
    } catch (const ExitError& e) {
        err << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDataError;
    }
}

}  // namespace rstar::cli
