#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "radiusseq/core.hpp"

namespace radiusseq {

enum class Method { greedy, nibble, exact, packing_greedy };

std::string to_string(Method m);
/// Accepts "greedy", "nibble", "exact", "packing-greedy" (or "packing").
Method parse_method(std::string_view name);

struct ConstructConfig {
    Method method = Method::greedy;
    /// Block length; 0 selects max(k+1, min(n, 4k)).
    std::uint32_t ell = 0;
    /// Candidate blocks scored per greedy step.
    std::uint32_t pool_size = 64;
    /// Nibble bite: fraction of the uncovered mass targeted per round.
    double bite = 0.1;
    std::uint64_t seed = 1;
    /// Cap on distinct states visited by the exact search.
    std::uint64_t max_states = 5'000'000;
};

struct ConstructResult {
    Sequence sequence;
    std::uint64_t blocks_used = 0;
    std::uint64_t length = 0;
    /// length / asymptotic target, as a decimal string.
    std::string ratio;
    bool verified = false;
};

std::uint32_t default_block_length(std::uint32_t n, std::uint32_t k);

/// Acceptance threshold of nibble round `round`: max(0.5 * 0.9^round, 0.05).
double nibble_threshold(std::uint32_t round);

/// Concatenates greedily chosen blocks until fewer than r subsets remain, then
/// emits each remaining subset contiguously.
ConstructResult construct_greedy(const RadiusSpec& spec, const ConstructConfig& cfg);

/// Rounds of random blocks accepted while their fresh-coverage fraction beats
/// a decaying threshold; the residue goes to the greedy steps and finisher.
ConstructResult construct_nibble(const RadiusSpec& spec, const ConstructConfig& cfg);

/// Shortest sequence by A* search over (covered set, last k symbols).
/// Needs C(n,t) <= 24 and n^k <= 1e5; throws size_error otherwise.
ConstructResult construct_exact(const RadiusSpec& spec, const ConstructConfig& cfg);

/// Greedy packing sequence; `seed` chooses the first symbol.
Sequence construct_packing_greedy(std::uint32_t n, std::uint32_t k, std::uint32_t t, std::uint64_t seed);

/// Dispatches on cfg.method. The packing method reports its length against
/// the same asymptotic target; `verified` then means the packing property.
ConstructResult construct(const RadiusSpec& spec, const ConstructConfig& cfg);

/// State-count estimate 2^C(n,t) * n^k used to reject exact-search requests.
double exact_state_estimate(const RadiusSpec& spec);
bool exact_feasible(const RadiusSpec& spec);

}  // namespace radiusseq
