#include <doctest.h>

#include "oracles.hpp"
#include "radiusseq/bounds.hpp"
#include "radiusseq/construct.hpp"

using namespace radiusseq;

namespace {

ConstructConfig config(Method m, std::uint64_t seed = 1, std::uint32_t ell = 0, std::uint32_t pool = 64)
{
    ConstructConfig cfg;
    cfg.method = m;
    cfg.seed = seed;
    cfg.ell = ell;
    cfg.pool_size = pool;
    return cfg;
}

double ratio_of(const ConstructResult& r)
{
    return std::stod(r.ratio);
}

}  // namespace

TEST_CASE("method names")
{
    CHECK(parse_method("greedy") == Method::greedy);
    CHECK(parse_method("packing") == Method::packing_greedy);
    CHECK(to_string(Method::packing_greedy) == "packing-greedy");
    CHECK_THROWS_AS(parse_method("annealing"), parameter_error);
    CHECK(nibble_threshold(0) == doctest::Approx(0.5));
    CHECK(nibble_threshold(100) == doctest::Approx(0.05));
}

TEST_CASE("greedy produces valid sequences above the lower bound")
{
    auto r = construct(RadiusSpec{8, 3, 2}, config(Method::greedy, 1, 5));
    CHECK(r.verified);
    CHECK(verify_radius(r.sequence, RadiusSpec{8, 3, 2}).valid);
    CHECK(r.length >= best_lower_bound(8, 3, 2));
    CHECK(r.length == r.sequence.symbols.size());

    for (std::uint32_t n = 2; n <= 14; ++n) {
        for (std::uint32_t k = 1; k <= 4; ++k) {
            for (std::uint32_t t = 2; t <= std::min(k + 1, n); ++t) {
                for (Method m : {Method::greedy, Method::nibble}) {
                    CAPTURE(n);
                    CAPTURE(k);
                    CAPTURE(t);
                    auto res = construct(RadiusSpec{n, k, t}, config(m, n * 7 + k));
                    CHECK(verify_radius(res.sequence, RadiusSpec{n, k, t}).valid);
                    CHECK(res.length >= best_lower_bound(n, k, t));
                }
            }
        }
    }
}

TEST_CASE("one window suffices when n <= k+1")
{
    for (std::uint32_t n = 2; n <= 6; ++n) {
        auto r = construct(RadiusSpec{n, n - 1, 2}, config(Method::greedy, 3, n));
        CHECK(r.length == n);
    }
    auto two = construct(RadiusSpec{2, 1, 2}, config(Method::greedy));
    CHECK(two.sequence.symbols == std::vector<Symbol>{0, 1});
}

TEST_CASE("constructions are deterministic for a fixed seed")
{
    for (Method m : {Method::greedy, Method::nibble, Method::packing_greedy}) {
        auto a = construct(RadiusSpec{24, 3, 2}, config(m, 42));
        auto b = construct(RadiusSpec{24, 3, 2}, config(m, 42));
        CHECK(a.sequence.symbols == b.sequence.symbols);
    }
    auto a = construct(RadiusSpec{24, 3, 2}, config(Method::greedy, 1));
    auto b = construct(RadiusSpec{24, 3, 2}, config(Method::greedy, 2));
    CHECK(a.sequence.symbols != b.sequence.symbols);
}

TEST_CASE("exact search matches exhaustive reference lengths")
{
    struct Case {
        std::uint32_t n, k, t;
        std::uint64_t length;
    };
    // lengths frozen from the iterative-deepening reference search
    for (Case c : {Case{2, 1, 2, 2}, Case{3, 1, 2, 4}, Case{4, 1, 2, 8}, Case{5, 1, 2, 11}, Case{4, 2, 2, 5},
                   Case{5, 2, 2, 7}, Case{6, 2, 2, 12}, Case{4, 2, 3, 6}, Case{5, 2, 3, 13}, Case{5, 3, 3, 7},
                   Case{6, 3, 2, 8}, Case{5, 3, 4, 8}, Case{7, 2, 2, 14}, Case{6, 3, 3, 12}, Case{6, 4, 3, 8},
                   Case{7, 3, 2, 10}}) {
        CAPTURE(c.n);
        CAPTURE(c.k);
        CAPTURE(c.t);
        auto r = construct(RadiusSpec{c.n, c.k, c.t}, config(Method::exact));
        CHECK(r.verified);
        CHECK(r.length == c.length);
        CHECK(r.length >= best_lower_bound(c.n, c.k, c.t));
    }
}

TEST_CASE("exact search reproduces the reference search on small cases")
{
    for (std::uint32_t n = 3; n <= 5; ++n) {
        CHECK(construct(RadiusSpec{n, 2, 2}, config(Method::exact)).length == oracle::shortest_length(n, 2, 2));
    }
}

TEST_CASE("exact search for k=1 equals the closed form")
{
    for (std::uint32_t n = 2; n <= 5; ++n) {
        CHECK(construct(RadiusSpec{n, 1, 2}, config(Method::exact)).length == ghosh_f1(n));
    }
}

TEST_CASE("exact search rejects large instances")
{
    CHECK_FALSE(exact_feasible(RadiusSpec{12, 3, 2}));
    CHECK_THROWS_AS(construct(RadiusSpec{12, 3, 2}, config(Method::exact)), size_error);
    auto cfg = config(Method::exact);
    cfg.max_states = 10;
    CHECK_THROWS_AS(construct(RadiusSpec{6, 2, 2}, cfg), size_error);
}

TEST_CASE("greedy ratio improves with n")
{
    auto small = construct(RadiusSpec{20, 2, 2}, config(Method::greedy, 1, 8, 256));
    auto large = construct(RadiusSpec{60, 2, 2}, config(Method::greedy, 1, 8, 256));
    CHECK(ratio_of(large) < ratio_of(small));
    CHECK(ratio_of(large) <= 1.5);
}

TEST_CASE("nibble beats the naive all-pairs baseline")
{
    auto cfg = config(Method::nibble, 7, 8);
    auto r = construct(RadiusSpec{40, 2, 2}, cfg);
    CHECK(r.verified);
    CHECK(r.length < 2 * 780);
    CHECK(ratio_of(r) < 2.0);
}

TEST_CASE("packing greedy")
{
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        auto seq = construct_packing_greedy(8, 1, 2, seed);
        CHECK(verify_packing(seq, 1, 2).valid);
        CHECK(seq.symbols.size() <= 29);
    }
    for (std::uint32_t n = 3; n <= 9; ++n) {
        for (std::uint32_t k = 1; k <= 3 && k + 1 <= n; ++k) {
            for (std::uint32_t t = 2; t <= k + 1; ++t) {
                auto seq = construct_packing_greedy(n, k, t, n + k);
                CHECK(oracle::packing_valid(seq.symbols, k, t));
                auto r = construct(RadiusSpec{n, k, t}, config(Method::packing_greedy, n + k));
                CHECK(r.verified);
                CHECK(r.sequence.symbols == seq.symbols);
            }
        }
    }
}
