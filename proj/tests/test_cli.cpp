#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "cli_harness.hpp"
#include "rstar/index_file.hpp"

using rstar::testing::run_cli;
using rstar::testing::TempDir;

TEST_CASE("build and query the worked example") {
    TempDir dir;
    const auto input = dir.file("text.txt", "abracadabra");
    const auto index = dir.path("text.rsx");

    const auto built = run_cli({"build", "--input", input, "--output", index});
    REQUIRE(built.code == 0);
    CHECK(built.out.find("r=8") != std::string::npos);
    CHECK(built.out.find("z=6") != std::string::npos);
    CHECK(built.out.find("bytes=" + std::to_string(std::filesystem::file_size(index))) != std::string::npos);

    CHECK(run_cli({"query", "--index", index, "--mode", "locate", "--pattern", "abra"}).out == "2\t1 8\n");
    CHECK(run_cli({"query", "--index", index, "--mode", "count", "--pattern", "zz"}).out == "0\n");
    CHECK(run_cli({"query", "--index", index, "--mode", "leftmost", "--pattern", "zz"}).out == "-\n");
    CHECK(run_cli({"query", "--index", index, "--mode", "rightmost", "--pattern", "abra"}).out == "8\n");
    CHECK(run_cli({"query", "--index", index, "--mode", "locate", "--pattern", "zz"}).out == "0\t\n");

    const auto patterns = dir.file("p.txt", "abra\na\nd\nzz\n");
    const auto batch = run_cli({"query", "--index", index, "--mode", "locate", "--patterns-file", patterns,
                                "--verify", input});
    CHECK(batch.code == 0);
    CHECK(batch.out == "2\t1 8\n5\t1 4 6 8 11\n1\t7\n0\t\n");
    const auto left = run_cli({"query", "--index", index, "--mode", "leftmost", "--patterns-file", patterns});
    CHECK(left.out == "1\n1\n7\n-\n");
}

TEST_CASE("query error paths") {
    TempDir dir;
    const auto input = dir.file("text.txt", "abracadabra");
    const auto index = dir.path("fwd.rsx");
    REQUIRE(run_cli({"build", "--input", input, "--output", index, "--no-rightmost"}).code == 0);

    const auto rightmost = run_cli({"query", "--index", index, "--mode", "rightmost", "--pattern", "a"});
    CHECK(rightmost.code == 2);
    CHECK_FALSE(rightmost.err.empty());

    CHECK(run_cli({"query", "--index", index, "--mode", "bogus", "--pattern", "a"}).code == 1);
    CHECK(run_cli({"query", "--index", index, "--mode", "count"}).code == 1);
    CHECK(run_cli({"frobnicate"}).code == 1);
    CHECK(run_cli({}).code == 1);

    const auto empty_line = dir.file("bad.txt", "a\n\nb\n");
    CHECK(run_cli({"query", "--index", index, "--mode", "count", "--patterns-file", empty_line}).code == 2);

    // a different text makes verification fail
    const auto other = dir.file("other.txt", "abracadabrx");
    const auto mismatch = run_cli({"query", "--index", index, "--mode", "count", "--pattern", "abra", "--verify", other});
    CHECK(mismatch.code == 3);
    CHECK(mismatch.err.find("mismatch") != std::string::npos);
}

TEST_CASE("build error paths") {
    TempDir dir;
    const auto empty = dir.file("empty.txt", "");
    CHECK(run_cli({"build", "--input", empty, "--output", dir.path("x.rsx")}).code == 2);
    const auto zero = dir.file("zero.txt", std::string("ab\0c", 4));
    CHECK(run_cli({"build", "--input", zero, "--output", dir.path("y.rsx")}).code == 2);
    CHECK(run_cli({"build", "--input", dir.path("missing.txt"), "--output", dir.path("z.rsx")}).code == 1);
    const auto input = dir.file("t.txt", "abc");
    CHECK(run_cli({"build", "--input", input, "--output", dir.path("no/such/dir/i.rsx")}).code == 2);
}

TEST_CASE("malformed index files give data errors") {
    TempDir dir;
    const auto input = dir.file("text.txt", "abracadabra");
    const auto index = dir.path("t.rsx");
    REQUIRE(run_cli({"build", "--input", input, "--output", index}).code == 0);
    const auto bytes = rstar::read_file_bytes(index);

    std::string corrupt(bytes.begin(), bytes.end());
    corrupt[1] = '?';
    const auto bad_magic = dir.file("magic.rsx", corrupt);
    CHECK(run_cli({"query", "--index", bad_magic, "--mode", "count", "--pattern", "a"}).code == 2);
    CHECK(run_cli({"stats", "--index", bad_magic}).code == 2);

    const auto truncated = dir.file("trunc.rsx", std::string(bytes.begin(), bytes.begin() + bytes.size() / 2));
    CHECK(run_cli({"query", "--index", truncated, "--mode", "locate", "--pattern", "a"}).code == 2);
}

TEST_CASE("stats") {
    TempDir dir;
    const auto input = dir.file("text.txt", "abracadabra");
    const auto index = dir.path("t.rsx");
    REQUIRE(run_cli({"build", "--input", input, "--output", index}).code == 0);

    const auto text = run_cli({"stats", "--index", index});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("r_star: 16") != std::string::npos);

    const auto js = run_cli({"stats", "--index", index, "--json"});
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["r"] == 8);
    CHECK(j["r_star"] == j["r"].get<int>() + j["r_rev"].get<int>());
    CHECK(j["z"] == 6);
    std::uint64_t sum = j["header_bytes"].get<std::uint64_t>();
    for (const auto& [key, value] : j.items()) {
        if (key.rfind("section_", 0) == 0) {
            sum += value.get<std::uint64_t>();
        }
    }
    CHECK(sum == std::filesystem::file_size(index));
    CHECK(j["file_bytes"] == std::filesystem::file_size(index));
}
