#include "radiusseq/cachesim.hpp"

#include <algorithm>
#include <deque>

#include <boost/dynamic_bitset.hpp>

namespace radiusseq {

namespace {

// Triangular index of the pair lo < hi among n symbols.
std::size_t pair_index(Symbol lo, Symbol hi, std::uint32_t n)
{
    return static_cast<std::size_t>(lo) * n + hi;
}

class Residency {
  public:
    explicit Residency(std::uint32_t n) : n_(n), seen_(static_cast<std::size_t>(n) * n) {}

    void record(CacheTrace& trace, Symbol loaded, std::vector<Symbol> resident)
    {
        for (std::size_t i = 0; i < resident.size(); ++i) {
            for (std::size_t j = i + 1; j < resident.size(); ++j) {
                Symbol a = std::min(resident[i], resident[j]);
                Symbol b = std::max(resident[i], resident[j]);
                if (a != b && !seen_.test(pair_index(a, b, n_))) {
                    seen_.set(pair_index(a, b, n_));
                    trace.coresident_pairs.emplace_back(a, b);
                }
            }
        }
        ++trace.loads;
        trace.events.push_back(LoadEvent{loaded, std::move(resident)});
    }

    [[nodiscard]] bool seen(Symbol a, Symbol b) const
    {
        return seen_.test(pair_index(std::min(a, b), std::max(a, b), n_));
    }

  private:
    std::uint32_t n_;
    boost::dynamic_bitset<std::uint64_t> seen_;
};

void finalize(CacheTrace& trace)
{
    std::sort(trace.coresident_pairs.begin(), trace.coresident_pairs.end());
    const std::uint64_t all = std::uint64_t{trace.n} * (trace.n - (trace.n > 0 ? 1 : 0)) / 2;
    trace.complete = trace.coresident_pairs.size() == all;
}

}  // namespace

CacheTrace simulate_fifo(const Sequence& seq, std::uint32_t k)
{
    check_symbols(seq);
    CacheTrace trace;
    trace.n = seq.n;
    trace.cache_size = k + 1;
    Residency residency(seq.n);
    std::deque<Symbol> cache;
    for (auto s : seq.symbols) {
        if (cache.size() == trace.cache_size) {
            cache.pop_front();
        }
        cache.push_back(s);
        residency.record(trace, s, {cache.begin(), cache.end()});
    }
    finalize(trace);
    return trace;
}

CacheTrace simulate_pinned_batch(std::uint32_t n, std::uint32_t k)
{
    if (n < 1 || k < 1) {
        throw parameter_error("pinned batch needs n >= 1 and k >= 1");
    }
    CacheTrace trace;
    trace.n = n;
    trace.cache_size = k + 1;
    Residency residency(n);
    for (Symbol first = 0; first < n; first += k) {
        const Symbol end = std::min<Symbol>(first + k, n);
        bool internal_missing = false;
        for (Symbol a = first; a < end && !internal_missing; ++a) {
            for (Symbol b = a + 1; b < end; ++b) {
                if (!residency.seen(a, b)) {
                    internal_missing = true;
                    break;
                }
            }
        }
        if (end >= n && !internal_missing) {
            continue;
        }
        std::vector<Symbol> pinned;
        for (Symbol s = first; s < end; ++s) {
            pinned.push_back(s);
            residency.record(trace, s, pinned);
        }
        for (Symbol s = end; s < n; ++s) {
            std::vector<Symbol> resident = pinned;
            resident.push_back(s);
            residency.record(trace, s, std::move(resident));
        }
    }
    finalize(trace);
    return trace;
}

std::uint64_t pinned_batch_loads(std::uint32_t n, std::uint32_t k)
{
    std::uint64_t loads = 0;
    for (std::uint64_t first = 0; first < n; first += k) {
        const std::uint64_t end = std::min<std::uint64_t>(first + k, n);
        const std::uint64_t size = end - first;
        const std::uint64_t streamed = n - end;
        if (streamed == 0 && size < 2) {
            continue;
        }
        loads += size + streamed;
    }
    return loads;
}

std::uint64_t new_pairs_per_load_audit(const CacheTrace& trace)
{
    boost::dynamic_bitset<std::uint64_t> seen(static_cast<std::size_t>(trace.n) * trace.n);
    std::uint64_t worst = 0;
    for (const auto& ev : trace.events) {
        std::uint64_t fresh = 0;
        for (std::size_t i = 0; i < ev.resident.size(); ++i) {
            for (std::size_t j = i + 1; j < ev.resident.size(); ++j) {
                Symbol a = std::min(ev.resident[i], ev.resident[j]);
                Symbol b = std::max(ev.resident[i], ev.resident[j]);
                if (a != b && !seen.test(pair_index(a, b, trace.n))) {
                    seen.set(pair_index(a, b, trace.n));
                    ++fresh;
                }
            }
        }
        worst = std::max(worst, fresh);
    }
    return worst;
}

}  // namespace radiusseq
