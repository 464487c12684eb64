#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "radiusseq/core.hpp"

namespace radiusseq {

using SymbolPair = std::pair<Symbol, Symbol>;

/// One load: the symbol brought in and the cache contents right after it.
struct LoadEvent {
    Symbol loaded = 0;
    std::vector<Symbol> resident;
};

struct CacheTrace {
    std::uint32_t n = 0;
    std::uint32_t cache_size = 0;
    std::uint64_t loads = 0;
    /// Sorted (lo, hi) pairs that were ever cached together.
    std::vector<SymbolPair> coresident_pairs;
    bool complete = false;
    std::vector<LoadEvent> events;
};

/// Replays `seq` through a first-in first-out cache holding k+1 items.
CacheTrace simulate_fifo(const Sequence& seq, std::uint32_t k);

/// k pinned slots plus one streaming slot: each batch of k images stays
/// resident while every later image is streamed through the free slot.
/// A batch is loaded only if it has images left to stream or internal pairs
/// not yet seen together.
CacheTrace simulate_pinned_batch(std::uint32_t n, std::uint32_t k);

/// Load count predicted for simulate_pinned_batch without simulating.
std::uint64_t pinned_batch_loads(std::uint32_t n, std::uint32_t k);

/// Largest number of pairs that became co-resident for the first time on a
/// single load, recomputed from the event log.
std::uint64_t new_pairs_per_load_audit(const CacheTrace& trace);

}  // namespace radiusseq
