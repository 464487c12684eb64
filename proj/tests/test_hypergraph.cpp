#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "radiusseq/hypergraph.hpp"

using namespace radiusseq;

TEST_CASE("uniformity_r")
{
    CHECK(uniformity_r(5, 3, 2) == 9);
    CHECK(uniformity_r(4, 2, 3) == 2);
    for (std::uint32_t k = 1; k < 10; ++k) {
        CHECK(uniformity_r(k + 1, k, 2) == (k + 1) * k / 2);
    }
    for (std::uint32_t ell = 2; ell <= 12; ++ell) {
        for (std::uint32_t k = 1; k <= ell; ++k) {
            for (std::uint32_t t = 2; t <= std::min(k + 1, ell); ++t) {
                CAPTURE(ell);
                CAPTURE(k);
                CAPTURE(t);
                CHECK(uniformity_r(ell, k, t) == oracle::position_subsets(ell, k, t));
            }
        }
    }
}

TEST_CASE("vertex degree")
{
    // blocks of 3 distinct symbols from 5 with {0,1} adjacent
    CHECK(make_params(5, 3, 1).degree == 12);
    CHECK(vertex_degree_bruteforce(5, 3, 1, 2, {0, 1}) == 12);
    CHECK(make_params(2, 2, 1).degree == 2);
    struct Case {
        std::uint32_t n, ell, k, t;
    };
    for (Case c : {Case{7, 4, 2, 2}, Case{6, 4, 3, 3}, Case{7, 5, 3, 2}, Case{6, 5, 2, 3}, Case{6, 4, 3, 4}}) {
        auto p = make_params(c.n, c.ell, c.k, c.t);
        Subset v(c.t);
        std::iota(v.begin(), v.end(), Symbol{0});
        CHECK(p.degree == vertex_degree_bruteforce(c.n, c.ell, c.k, c.t, v));
    }
    CHECK_THROWS_AS(make_params(4, 5, 2), parameter_error);
    CHECK_THROWS_AS(make_params(6, 2, 3), parameter_error);
}

TEST_CASE("codegree")
{
    // Pairs sharing nothing never sit in one block of length 3 at radius 1.
    CHECK(codegree_bruteforce(6, 3, 1, 2, {0, 1}, {2, 3}) == 0);
    // exhaustive enumeration: 72 blocks of length 4 over 6 symbols contain
    // both {0,1} and {0,2} at radius 3
    CHECK(codegree_bruteforce(6, 4, 3, 2, {0, 1}, {0, 2}) == 72);
    CHECK(codegree_by_placement(6, 4, 3, 2, {0, 1}, {0, 2}) == 72);

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint32_t n = 4 + rng() % 4;
        std::uint32_t ell = 2 + rng() % (n - 1);
        std::uint32_t k = 1 + rng() % ell;
        std::uint32_t t = 2 + rng() % std::min(k, ell - 1);
        auto all = oracle::all_subsets(n, t);
        auto u = all[rng() % all.size()];
        auto v = all[rng() % all.size()];
        if (u == v) {
            continue;
        }
        CAPTURE(n);
        CAPTURE(ell);
        CAPTURE(k);
        CAPTURE(t);
        CHECK(codegree_by_placement(n, ell, k, t, u, v) == codegree_bruteforce(n, ell, k, t, u, v));
    }
}

TEST_CASE("codegree ratio shrinks as n grows")
{
    double prev = 2.0;
    for (std::uint32_t n : {6u, 8u, 10u, 12u}) {
        auto s = max_codegree(make_params(n, 4, 2));
        CHECK(s.ratio < prev);
        prev = s.ratio;
    }
    auto s = max_codegree(make_params(12, 4, 2));
    CHECK(s.max_codegree == 144);
    CHECK(make_params(12, 4, 2).degree == 900);
}

TEST_CASE("block_vertices")
{
    auto v = block_vertices(Block{{3, 0, 2}}, 1, 2);
    CHECK(v == std::vector<Subset>{{0, 2}, {0, 3}});
    CHECK_THROWS_AS(block_vertices(Block{{1, 2, 1}}, 1, 2), parameter_error);
}

TEST_CASE("every block covers exactly r vertices")
{
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 1000; ++trial) {
        std::uint32_t n = 3 + rng() % 20;
        std::uint32_t ell = 2 + rng() % (n - 1);
        std::uint32_t k = 1 + rng() % ell;
        std::uint32_t t = 2 + rng() % std::min(k, ell - 1);
        std::vector<Symbol> perm(n);
        std::iota(perm.begin(), perm.end(), Symbol{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        perm.resize(ell);
        auto covered = oracle::window_scan(perm, k, t);
        REQUIRE(covered.size() == uniformity_r(ell, k, t));
        CHECK(block_vertices(Block{perm}, k, t).size() == covered.size());
    }
}

TEST_CASE("enumerated hypergraph is regular and satisfies the handshake identity")
{
    struct Case {
        std::uint32_t n, ell, k, t;
    };
    for (Case c : {Case{6, 4, 2, 2}, Case{6, 3, 2, 3}, Case{7, 4, 3, 2}, Case{5, 5, 2, 3}}) {
        auto stats = enumerate_hypergraph(c.n, c.ell, c.k, c.t);
        auto p = make_params(c.n, c.ell, c.k, c.t);
        CHECK(stats.min_edge_size == p.r);
        CHECK(stats.max_edge_size == p.r);
        std::uint64_t sum = 0;
        for (auto d : stats.degrees) {
            CHECK(p.degree == d);
            sum += d;
        }
        CHECK(sum == stats.hyperedges * p.r);
        CHECK(max_codegree(p).max_codegree == stats.max_codegree);
    }
}

TEST_CASE("enumeration guard")
{
    CHECK_THROWS_AS(check_enumerable(40, 8), size_error);
    CHECK_NOTHROW(check_enumerable(10, 5));
}
