#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace radiusseq {

using BigInt = boost::multiprecision::cpp_int;

/// Exact binomial coefficient; zero when t > n.
BigInt binomial(std::uint64_t n, std::uint64_t t);

/// Binomial that must fit in 64 bits; throws size_error otherwise.
std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t t);

/// Falling factorial n (n-1) ... (n-count+1).
BigInt falling_factorial(std::uint64_t n, std::uint64_t count);

/// Reduced non-negative fraction.
struct Rational {
    BigInt num{0};
    BigInt den{1};

    Rational() = default;
    Rational(BigInt num, BigInt den);

    [[nodiscard]] double to_double() const;
    /// "p/q", or "p" when q == 1.
    [[nodiscard]] std::string to_string() const;
    /// Fixed-point decimal with `digits` fractional digits (truncated).
    [[nodiscard]] std::string to_decimal(unsigned digits = 6) const;

    bool operator==(const Rational&) const = default;
};

enum class BoundMethod { lemma_pairs, ghosh_exact, rate_subsets };

std::string to_string(BoundMethod m);

struct BoundsReport {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint32_t t = 2;
    std::uint64_t lower_bound = 1;
    std::optional<std::uint64_t> exact_known;
    /// "ghosh" or "search" when exact_known is set.
    std::optional<std::string> exact_source;
    Rational asymptotic_target;
    BoundMethod method = BoundMethod::lemma_pairs;
    std::uint64_t lemma_bound = 0;
    std::uint64_t rate_bound = 0;
};

/// Least m with k*m > C(n,2); 1 when n < 2.
std::uint64_t lower_bound_pairs(std::uint32_t n, std::uint32_t k);

/// Shortest 1-radius sequence length, C(n,2)+1 for odd n, C(n,2)+n/2 for even n.
std::uint64_t ghosh_f1(std::uint32_t n);

/// Counting bound from the per-element subset rate: the first window holds at
/// most C(k+1,t) subsets and each later element adds at most C(k,t-1).
/// When n <= k+1 one window with all symbols is enough, so the answer is n.
std::uint64_t lower_bound_subsets(std::uint32_t n, std::uint32_t k, std::uint32_t t);

/// C(n,t) / C(k,t-1).
Rational asymptotic_target(std::uint32_t n, std::uint32_t k, std::uint32_t t);

/// Combines the counting bounds with any known exact value. `exact_length`
/// lets callers supply a value computed by exhaustive search.
BoundsReport bounds_report(std::uint32_t n, std::uint32_t k, std::uint32_t t,
                           std::optional<std::uint64_t> exact_length = std::nullopt);

/// Best available lower bound for (n,k,t): max of the applicable bounds.
std::uint64_t best_lower_bound(std::uint32_t n, std::uint32_t k, std::uint32_t t);

}  // namespace radiusseq
