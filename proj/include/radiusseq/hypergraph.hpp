#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "radiusseq/bounds.hpp"
#include "radiusseq/core.hpp"

namespace radiusseq {

// Implicit hypergraph whose vertices are the t-subsets of an n-symbol
// alphabet and whose hyperedges are the length-ell sequences with distinct
// entries; a block contains every t-subset it covers at radius k. The graph
// is never materialized.

struct HypergraphParams {
    std::uint32_t n = 0;
    std::uint32_t ell = 0;
    std::uint32_t k = 1;
    std::uint32_t t = 2;
    std::uint64_t r = 0;
    BigInt degree = 0;
};

/// Validates k <= ell <= n, 2 <= t <= k+1 and fills r and degree.
HypergraphParams make_params(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t = 2);

/// A hyperedge: ell distinct symbols.
struct Block {
    std::vector<Symbol> entries;
};

/// Number of t-subsets of positions {0..ell-1} spanning at most k.
/// Closed form ell*k - k(k+1)/2 for t = 2 (k < ell); otherwise summed by the
/// smallest chosen position.
std::uint64_t uniformity_r(std::uint32_t ell, std::uint32_t k, std::uint32_t t);

/// Exact vertex degree. For pairs this is 2r (n-2)(n-3)...(n-ell+1); for
/// larger t the same counting gives r * t! * (n-t)...(n-ell+1).
BigInt vertex_degree(const HypergraphParams& params);

/// Calls fn for every hyperedge in lexicographic order.
void for_each_block(std::uint32_t n, std::uint32_t ell, const std::function<void(std::span<const Symbol>)>& fn);

/// Blocks we allow brute-force enumeration to visit.
inline constexpr std::uint64_t kMaxEnumeratedBlocks = 100'000'000;

/// Throws size_error when n!/(n-ell)! exceeds kMaxEnumeratedBlocks.
void check_enumerable(std::uint32_t n, std::uint32_t ell);

/// Degree of `vertex` by enumerating every block.
std::uint64_t vertex_degree_bruteforce(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t,
                                       const Subset& vertex);

/// Number of blocks covering both u and v, by enumerating every block.
std::uint64_t codegree_bruteforce(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t,
                                  const Subset& u, const Subset& v);

/// Same count as codegree_bruteforce, computed by placing only the symbols of
/// u and v inside one block and scaling by the ways to fill the other slots.
BigInt codegree_by_placement(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t,
                             const Subset& u, const Subset& v);

struct CodegreeSummary {
    BigInt max_codegree = 0;
    /// codegree for a pair of vertices sharing i symbols, i = 0..t-1
    /// (zero where the alphabet is too small for such a pair).
    std::vector<BigInt> by_intersection;
    double ratio = 0.0;  // max_codegree / degree
};

/// Codegree depends only on how many symbols two vertices share, so the
/// maximum is taken over one representative pair per intersection size.
CodegreeSummary max_codegree(const HypergraphParams& params);

/// Statistics gathered from one full pass over every block.
struct EnumerationStats {
    std::uint64_t hyperedges = 0;
    std::uint64_t min_edge_size = 0;
    std::uint64_t max_edge_size = 0;
    std::vector<std::uint64_t> degrees;  // by colex rank of the vertex
    std::uint64_t max_codegree = 0;
};

EnumerationStats enumerate_hypergraph(std::uint32_t n, std::uint32_t ell, std::uint32_t k, std::uint32_t t);

/// Covered t-subsets of a block; throws parameter_error on repeated entries.
std::vector<Subset> block_vertices(const Block& b, std::uint32_t k, std::uint32_t t);

}  // namespace radiusseq
