#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "radiusseq/bench.hpp"
#include "radiusseq/cli.hpp"
#include "radiusseq/io.hpp"

using namespace radiusseq;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "radiusseq");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    auto dir = fs::temp_directory_path() / "radiusseq_tests";
    fs::create_directories(dir);
    return dir / name;
}

void write_text(const fs::path& p, const std::string& text)
{
    std::ofstream f(p);
    f << text;
}

const char* kExampleFile = "n=8 k=3 t=2 m=16\n0 1 2 3 4 5 6 7\n0 1 2 4 5 6 3 7\n";

}  // namespace

TEST_CASE("parse_sequence_text")
{
    auto f = parse_sequence_text(kExampleFile);
    CHECK(f.sequence.n == 8);
    CHECK(f.sequence.size() == 16);
    CHECK(f.k == 3u);
    auto bare = parse_sequence_text("# comment\n2 0 1\n");
    CHECK(bare.sequence.n == 3);
    CHECK_FALSE(bare.k);
    CHECK_THROWS_AS(parse_sequence_text(""), input_error);
    CHECK_THROWS_AS(parse_sequence_text("0 1 x 2"), input_error);
    CHECK_THROWS_AS(parse_sequence_text("n=4 m=5\n0 1 2 3\n"), input_error);
    CHECK_THROWS_AS(parse_sequence_text("n=2\n0 1 2\n"), input_error);
    auto round = parse_sequence_text(format_sequence_text(f.sequence, 3, 2));
    CHECK(round.sequence.symbols == f.sequence.symbols);
    CHECK(round.sequence.n == 8);
}

TEST_CASE("cli verify")
{
    auto good = scratch("example.txt");
    write_text(good, kExampleFile);
    auto ok = run_cli({"verify", good.string()});
    CHECK(ok.code == 0);
    auto j = json::parse(ok.out);
    CHECK(j["valid"] == true);
    CHECK(j["covered_count"] == 28);

    auto path = scratch("path.txt");
    write_text(path, "n=4 k=1\n0 1 2 3\n");
    auto bad = run_cli({"verify", "--seq", path.string()});
    CHECK(bad.code == 1);
    CHECK(json::parse(bad.out)["uncovered"].size() == 3);

    auto truncated = scratch("truncated.txt");
    write_text(truncated, "n=8 k=3 m=16\n0 1 2 3 4 5 6 7\n");
    CHECK(run_cli({"verify", truncated.string()}).code == 2);
    CHECK(run_cli({"verify", scratch("missing.txt").string()}).code == 2);
    CHECK(run_cli({"verify"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);

    CHECK(run_cli({"verify", "--packing", "--k", "1", path.string()}).code == 0);
}

TEST_CASE("cli construct round trip")
{
    auto out = scratch("built.txt");
    auto res = run_cli({"construct", "--n", "12", "--k", "3", "--seed", "5", "--out", out.string()});
    REQUIRE(res.code == 0);
    auto j = json::parse(res.out);
    CHECK(j["verified"] == true);
    CHECK(j["length"].get<std::uint64_t>() >= j["lower_bound"].get<std::uint64_t>());
    CHECK(fs::exists(out.string() + ".json"));
    CHECK(run_cli({"verify", out.string()}).code == 0);

    auto again = run_cli({"construct", "--n", "12", "--k", "3", "--seed", "5"});
    CHECK(again.out == res.out);
    CHECK(run_cli({"construct", "--n", "12", "--k", "3", "--t", "9"}).code == 2);
    CHECK(run_cli({"construct", "--n", "12", "--k", "3", "--method", "magic"}).code == 2);
}

TEST_CASE("cli bounds and exact")
{
    auto b = run_cli({"bounds", "--n", "8", "--k", "3"});
    REQUIRE(b.code == 0);
    auto j = json::parse(b.out);
    CHECK(j["lemma_bound"] == 10);
    CHECK(j["lower_bound"] == 12);
    CHECK(j["asymptotic_target"] == "28/3");

    auto e = run_cli({"exact", "--n", "3", "--k", "1"});
    REQUIRE(e.code == 0);
    CHECK(json::parse(e.out)["length"] == 4);
    CHECK(run_cli({"exact", "--n", "12", "--k", "3"}).code == 3);

    auto be = run_cli({"bounds", "--n", "5", "--k", "2", "--exact"});
    CHECK(json::parse(be.out)["exact_known"] == 7);
}

TEST_CASE("cli hypergraph, cachesim and pack")
{
    auto h = run_cli({"hypergraph", "--n", "6", "--ell", "4", "--k", "2", "--bruteforce"});
    REQUIRE(h.code == 0);
    auto j = json::parse(h.out);
    CHECK(j["r"] == 5);
    CHECK(j["bruteforce"]["min_degree"] == j["bruteforce"]["max_degree"]);

    auto c = run_cli({"cachesim", "--n", "200", "--k", "4", "--strategy", "batch"});
    REQUIRE(c.code == 0);
    CHECK(json::parse(c.out)["loads"] == 5100);

    auto good = scratch("example_cache.txt");
    write_text(good, kExampleFile);
    auto f = run_cli({"cachesim", "--seq", good.string(), "--k", "3"});
    CHECK(f.code == 0);
    CHECK(json::parse(f.out)["complete"] == true);

    auto p = run_cli({"pack", "--n", "8", "--k", "1"});
    CHECK(p.code == 0);
    CHECK(json::parse(p.out)["valid"] == true);
}

TEST_CASE("cli bench")
{
    auto empty = run_cli({"bench", "--n", "21:20", "--k", "2", "--seeds", "1"});
    CHECK(empty.code == 0);
    CHECK(empty.out == std::string(kBenchCsvHeader) + "\n");

    std::vector<std::string> args{"bench", "--n", "20,40", "--k", "2", "--methods", "greedy,nibble", "--seeds", "1,2"};
    auto a = run_cli(args);
    REQUIRE(a.code == 0);
    auto b = run_cli(args);
    CHECK(a.out == b.out);
    std::istringstream lines(a.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) {
        rows.push_back(line);
    }
    REQUIRE(rows.size() == 9);
    CHECK(rows[0] == kBenchCsvHeader);
    CHECK(rows[1].rfind("20,2,2,greedy,", 0) == 0);
    CHECK(rows[1].back() == ',');  // no timing column by default

    CHECK(run_cli({"bench", "--n", "20", "--k", "2"}).code == 2);
}

TEST_CASE("thread cap")
{
    CHECK(effective_threads(1) == 1);
    CHECK(effective_threads(0) >= 1);
}
