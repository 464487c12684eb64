#include "radiusseq/hypergraph.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <string>

namespace radiusseq {

namespace {

void check_radius_params(std::uint32_t ell, std::uint32_t k, std::uint32_t t)
{
    if (ell < 1 || k < 1) {
        throw parameter_error("block length and radius must be positive");
    }
    if (t < 2 || t > k + 1) {
        throw parameter_error("subset size t must satisfy 2 <= t <= k+1");
    }
}

// Positions of `sub` inside a block given symbol -> position.
bool placed_within_radius(const Subset& sub, const std::vector<int>& position_of, std::uint32_t k)
{
    int lo = position_of[sub.front()];
    int hi = lo;
    for (auto s : sub) {
        lo = std::min(lo, position_of[s]);
        hi = std::max(hi, position_of[s]);
    }
    return static_cast<std::uint32_t>(hi - lo) <= k;
}

bool covers(std::span<const Symbol> block, const Subset& sub, std::uint32_t k)
{
    std::size_t lo = block.size();
    std::size_t hi = 0;
    for (auto s : sub) {
        auto it = std::find(block.begin(), block.end(), s);
        if (it == block.end()) {
            return false;
        }
        auto pos = static_cast<std::size_t>(it - block.begin());
        lo = std::min(lo, pos);
        hi = std::max(hi, pos);
    }
    return hi - lo <= k;
}

void check_vertex(const Subset& v, std::uint32_t n, std::uint32_t t)
{
    if (v.size() != t) {
        throw parameter_error("vertex must have exactly t symbols");
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] >= n || (i > 0 && v[i - 1] >= v[i])) {
            throw parameter_error("vertex must be strictly increasing symbols below n");
        }
    }
}

}  // namespace

std::uint64_t uniformity_r(std::uint32_t ell, std::uint32_t k, std::uint32_t t)
{
    check_radius_params(ell, k, t);
    if (t == 2 && k < ell) {
        return std::uint64_t{ell} * k - std::uint64_t{k} * (k + 1) / 2;
    }
    std::uint64_t r = 0;
    for (std::uint32_t p = 0; p < ell; ++p) {
        std::uint32_t room = std::min(k, ell - 1 - p);
        r += binomial_u64(room, t - 1);
    }
    return r;
}

HypergraphParams make_params(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t)
{
    check_radius_params(ell, k, t);
    if (ell < k) {
        throw parameter_error("block length ell must be at least k");
    }
    if (n < ell) {
        throw parameter_error("alphabet size n=" + std::to_string(n) + " is smaller than block length ell=" +
                              std::to_string(ell));
    }
    HypergraphParams p{n, ell, k, t, uniformity_r(ell, k, t), 0};
    p.degree = vertex_degree(p);
    return p;
}

BigInt vertex_degree(const HypergraphParams& params)
{
    const auto n = params.n;
    const auto ell = params.ell;
    const auto k = params.k;
    const auto t = params.t;
    if (n < ell) {
        throw parameter_error("vertex degree needs n >= ell");
    }
    BigInt r = uniformity_r(ell, k, t);
    if (t == 2) {
        return 2 * r * falling_factorial(n - 2, ell - 2);
    }
    return r * falling_factorial(t, t) * falling_factorial(n - t, ell - t);
}

void check_enumerable(std::uint32_t n, std::uint32_t ell)
{
    BigInt blocks = falling_factorial(n, ell);
    if (blocks > kMaxEnumeratedBlocks) {
        throw size_error("enumerating " + blocks.str() + " blocks exceeds the limit of " +
                         std::to_string(kMaxEnumeratedBlocks) + "; use codegree_by_placement instead");
    }
}

void for_each_block(std::uint32_t n, std::uint32_t ell, const std::function<void(std::span<const Symbol>)>& fn)
{
    check_enumerable(n, ell);
    if (ell > n) {
        return;
    }
    if (ell == 0) {
        fn({});
        return;
    }
    std::vector<Symbol> block(ell);
    std::vector<bool> used(n, false);
    // Iterative depth-first enumeration; next[d] is the next symbol to try at depth d.
    std::vector<Symbol> next(ell + 1, 0);
    std::size_t depth = 0;
    while (true) {
        if (depth == ell) {
            fn(std::span<const Symbol>(block));
            --depth;
            used[block[depth]] = false;
            continue;
        }
        Symbol s = next[depth];
        while (s < n && used[s]) {
            ++s;
        }
        if (s >= n) {
            next[depth] = 0;
            if (depth == 0) {
                return;
            }
            --depth;
            used[block[depth]] = false;
            continue;
        }
        block[depth] = s;
        used[s] = true;
        next[depth] = s + 1;
        ++depth;
    }
}

std::uint64_t vertex_degree_bruteforce(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t,
                                       const Subset& vertex)
{
    check_radius_params(ell, k, t);
    check_vertex(vertex, n, t);
    std::uint64_t count = 0;
    for_each_block(n, ell, [&](std::span<const Symbol> b) {
        if (covers(b, vertex, k)) {
            ++count;
        }
    });
    return count;
}

std::uint64_t codegree_bruteforce(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t,
                                  const Subset& u, const Subset& v)
{
    check_radius_params(ell, k, t);
    check_vertex(u, n, t);
    check_vertex(v, n, t);
    if (u == v) {
        throw parameter_error("codegree needs two distinct vertices");
    }
    std::uint64_t count = 0;
    for_each_block(n, ell, [&](std::span<const Symbol> b) {
        if (covers(b, u, k) && covers(b, v, k)) {
            ++count;
        }
    });
    return count;
}

BigInt codegree_by_placement(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t,
                             const Subset& u, const Subset& v)
{
    check_radius_params(ell, k, t);
    check_vertex(u, n, t);
    check_vertex(v, n, t);
    if (u == v) {
        throw parameter_error("codegree needs two distinct vertices");
    }
    Subset both;
    std::set_union(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(both));
    const auto s = static_cast<std::uint32_t>(both.size());
    if (s > ell || n < ell) {
        return 0;
    }
    // Relabel the symbols of u and v to 0..s-1 and place them into distinct positions.
    auto relabel = [&](const Subset& x) {
        Subset out;
        for (auto sym : x) {
            out.push_back(static_cast<Symbol>(std::lower_bound(both.begin(), both.end(), sym) - both.begin()));
        }
        return out;
    };
    const Subset ru = relabel(u);
    const Subset rv = relabel(v);
    std::vector<int> position_of(s);
    std::uint64_t placements = 0;
    for_each_block(ell, s, [&](std::span<const Symbol> positions) {
        for (std::uint32_t i = 0; i < s; ++i) {
            position_of[i] = static_cast<int>(positions[i]);
        }
        if (placed_within_radius(ru, position_of, k) && placed_within_radius(rv, position_of, k)) {
            ++placements;
        }
    });
    return BigInt(placements) * falling_factorial(n - s, ell - s);
}

CodegreeSummary max_codegree(const HypergraphParams& params)
{
    const auto& p = params;
    CodegreeSummary out;
    out.by_intersection.assign(p.t, 0);
    for (std::uint32_t shared = 0; shared < p.t; ++shared) {
        std::uint32_t symbols_needed = 2 * p.t - shared;
        if (symbols_needed > p.n) {
            continue;
        }
        Subset u;
        Subset v;
        for (Symbol i = 0; i < p.t; ++i) {
            u.push_back(i);
        }
        for (Symbol i = 0; i < shared; ++i) {
            v.push_back(i);
        }
        for (Symbol i = p.t; v.size() < p.t; ++i) {
            v.push_back(i);
        }
        out.by_intersection[shared] = codegree_by_placement(p.n, p.ell, p.k, p.t, u, v);
        out.max_codegree = std::max(out.max_codegree, out.by_intersection[shared]);
    }
    if (p.degree > 0) {
        out.ratio = out.max_codegree.convert_to<double>() / p.degree.convert_to<double>();
    }
    return out;
}

EnumerationStats enumerate_hypergraph(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t)
{
    check_radius_params(ell, k, t);
    check_enumerable(n, ell);
    SubsetIndexer index(n, t);
    const std::uint64_t vertices = index.size();
    if (vertices > 4096) {
        throw size_error("codegree table for " + std::to_string(vertices) + " vertices is too large");
    }
    EnumerationStats stats;
    stats.degrees.assign(vertices, 0);
    stats.min_edge_size = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> codeg(vertices * vertices, 0);
    std::vector<std::uint64_t> ranks;
    for_each_block(n, ell, [&](std::span<const Symbol> b) {
        ranks.clear();
        for (std::size_t j = 0; j < b.size(); ++j) {
            for_each_subset_ending_at(b, j, k, t, [&](const Subset& s) { ranks.push_back(index.rank(s)); });
        }
        ++stats.hyperedges;
        stats.min_edge_size = std::min<std::uint64_t>(stats.min_edge_size, ranks.size());
        stats.max_edge_size = std::max<std::uint64_t>(stats.max_edge_size, ranks.size());
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            ++stats.degrees[ranks[i]];
            for (std::size_t j = i + 1; j < ranks.size(); ++j) {
                auto a = std::min(ranks[i], ranks[j]);
                auto c = std::max(ranks[i], ranks[j]);
                ++codeg[a * vertices + c];
            }
        }
    });
    if (stats.hyperedges == 0) {
        stats.min_edge_size = 0;
    }
    stats.max_codegree = codeg.empty() ? 0 : *std::max_element(codeg.begin(), codeg.end());
    return stats;
}

std::vector<Subset> block_vertices(const Block& b, std::uint32_t k, std::uint32_t t)
{
    std::vector<Symbol> sorted = b.entries;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw parameter_error("block entries must be distinct");
    }
    if (b.entries.empty()) {
        return {};
    }
    return enumerate_covered_subsets(Sequence(b.entries, sorted.back() + 1), k, t);
}

}  // namespace radiusseq
