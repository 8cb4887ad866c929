#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lapdiam/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = lapdiam::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& text) {
    std::vector<json> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        if (!line.empty()) out.push_back(json::parse(line));
    }
    return out;
}

}  // namespace

TEST_CASE("spectrum") {
    const auto k3 = run({"spectrum", "--family", "complete:3"});
    REQUIRE(k3.code == 0);
    const auto j = json::parse(k3.out);
    CHECK(j["spectrum"] == json::array({3.0, 3.0, 0.0}));
    CHECK(j["char_poly"] == json::array({"0", "9", "-6", "1"}));
    CHECK(j["n"] == 3);
    CHECK(j["diameter"] == 1);

    const auto k1 = json::parse(run({"spectrum", "--graph6", "@"}).out);
    CHECK(k1["spectrum"] == json::array({0.0}));

    const auto g = json::parse(run({"spectrum", "--family", "g_ndra:7,3,2,1"}).out);
    CHECK(g["spectrum"][4].get<double>() == doctest::Approx(3.660123).epsilon(1e-6));

    CHECK(run({"spectrum"}).code == 1);
    CHECK(run({"spectrum", "--graph6", "@", "--family", "r1"}).code == 1);
    CHECK(run({"spectrum", "--graph6", "B!"}).code == 1);
    CHECK(run({"spectrum", "--family", "nosuch"}).code == 1);
}

TEST_CASE("count") {
    auto count_of = [](std::vector<std::string> args) {
        const auto r = run(std::move(args));
        REQUIRE(r.code == 0);
        return json::parse(r.out)["count"].get<int>();
    };
    CHECK(count_of({"count", "--family", "complete_minus_edge:5", "--lo", "5", "--hi", "5"}) == 3);
    CHECK(count_of({"count", "--family", "path:6", "--lo", "1", "--hi", "6"}) == 4);
    CHECK(count_of({"count", "--family", "r2", "--lo", "1", "--hi", "7"}) == 5);
    CHECK(count_of({"count", "--family", "complete:3", "--lo", "0", "--hi", "3", "--hi-open"}) == 1);
    CHECK(count_of({"count", "--family", "complete:3", "--lo", "0", "--hi", "3", "--lo-open"}) == 2);
    CHECK(count_of({"count", "--family", "complete:3", "--lo", "5/2", "--hi", "7/2"}) == 2);
    CHECK(run({"count", "--family", "r2", "--lo", "1/0", "--hi", "7"}).code == 1);
    CHECK(run({"count", "--family", "r2", "--lo", "x", "--hi", "7"}).code == 1);
    CHECK(run({"count", "--family", "r2", "--lo", "8", "--hi", "7"}).code == 1);
}

TEST_CASE("family") {
    const auto edges = run({"family", "--name", "g_ndt", "--params", "7,3,2", "--emit", "edges"});
    REQUIRE(edges.code == 0);
    const auto j = json::parse(edges.out);
    CHECK(j["edges"].size() == 15);
    CHECK(j["labels"]["u1"] == 0);

    const auto h = json::parse(run({"family", "--name", "h_npq", "--params", "8,3,3", "--emit", "edges"}).out);
    const auto u = h["labels"]["u"].get<int>();
    const auto v = h["labels"]["v"].get<int>();
    bool found = false;
    for (const auto& e : h["edges"]) found = found || (e[0] == std::min(u, v) && e[1] == std::max(u, v));
    CHECK(found);

    CHECK(run({"family", "--name", "path", "--params", "3"}).out == "Bg\n");
    const auto bad = run({"family", "--name", "g_ndt", "--params", "7,3,9"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("2 <= t <= d") != std::string::npos);
    CHECK(run({"family", "--name", "path", "--params", "3", "--emit", "xml"}).code == 1);
}

TEST_CASE("verify") {
    const auto b6 = run({"verify", "--builtin", "6", "--checks", "all"});
    CHECK(b6.code == 0);
    const auto summary = json::parse(b6.err.substr(0, b6.err.find('\n')));
    CHECK(summary["graphs"] == 112);
    CHECK(summary["theorem_violations"] == 0);
    CHECK(summary["exit_status"] == 0);

    const auto r1 = run({"verify", "--family", "r1", "--checks", "T1_5"});
    CHECK(r1.code == 0);
    const auto r1_lines = lines(r1.out);
    REQUIRE(r1_lines.size() == 1);
    CHECK(r1_lines[0]["tight"] == true);

    const auto bad = run({"verify", "--family", "r1", "--checks", "T1_5,NOPE"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("valid names") != std::string::npos);
    CHECK(run({"verify", "--family", "r1", "--builtin", "5"}).code == 1);
    CHECK(run({"verify", "--checks", "all"}).code == 1);
    CHECK(run({"verify", "--builtin", "5", "--jobs", "0"}).code == 1);
    CHECK(run({"verify", "--builtin", "9"}).code == 1);
    CHECK(run({"verify", "--graph6-file", "/nonexistent/x.g6"}).code == 3);
}

TEST_CASE("verify over a graph6 file") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto corpus = dir / "lapdiam_cli_corpus.g6";
    const auto report = dir / "lapdiam_cli_report.jsonl";
    {
        std::ofstream out(corpus);
        out << "G~~~~{\nDhc\n";  // K8 and C5
    }
    const auto r = run({"verify", "--graph6-file", corpus.string(), "--checks", "CONJ", "--out", report.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(report);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto rows = lines(buf.str());
    CHECK(rows.size() >= 2);
    for (const auto& row : rows) CHECK(row["theorem"] == "CONJ");

    {
        std::ofstream out(corpus);
        out << "Dhc\nbroken line\n";
    }
    CHECK(run({"verify", "--graph6-file", corpus.string(), "--checks", "T1_2"}).code == 3);
    std::filesystem::remove(corpus);
    std::filesystem::remove(report);
}

TEST_CASE("verify output does not depend on --jobs") {
    const auto one = run({"verify", "--builtin", "6", "--checks", "all", "--jobs", "1"});
    const auto eight = run({"verify", "--builtin", "6", "--checks", "all", "--jobs", "8"});
    CHECK(one.out == eight.out);
    CHECK(one.err == eight.err);
    const auto a = run({"verify", "--random", "9", "--count", "20", "--seed", "5", "--jobs", "3"});
    const auto b = run({"verify", "--random", "9", "--count", "20", "--seed", "5", "--jobs", "1"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("help and usage") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
}
