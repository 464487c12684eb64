#include "radiusseq/construct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "radiusseq/bounds.hpp"
#include "radiusseq/hypergraph.hpp"

namespace radiusseq {

namespace {

using Rng = std::mt19937_64;

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound)
{
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

// Coverage state of a sequence under construction, with the list of
// uncovered subsets kept for O(1) sampling.
class Tracker {
  public:
    Tracker(std::uint32_t n, std::uint32_t k, std::uint32_t t)
        : n_(n), k_(k), t_(t), cover_(n, t), position_(cover_.total()), uncovered_(cover_.total()),
          uncovered_degree_(n, 0)
    {
        std::iota(uncovered_.begin(), uncovered_.end(), std::uint64_t{0});
        std::iota(position_.begin(), position_.end(), std::uint64_t{0});
        std::uint64_t per_symbol = n >= 1 ? binomial_u64(n - 1, t - 1) : 0;
        std::fill(uncovered_degree_.begin(), uncovered_degree_.end(), per_symbol);
    }

    [[nodiscard]] std::uint64_t uncovered() const noexcept { return uncovered_.size(); }
    [[nodiscard]] const std::vector<Symbol>& sequence() const noexcept { return seq_; }
    [[nodiscard]] std::uint64_t uncovered_degree(Symbol s) const { return uncovered_degree_[s]; }
    [[nodiscard]] const CoverageSet& cover() const noexcept { return cover_; }

    Subset random_uncovered(Rng& rng) const
    {
        return cover_.indexer().unrank(uncovered_[uniform_below(rng, uncovered_.size())]);
    }

    /// Number of distinct uncovered subsets the block would cover if appended.
    std::uint64_t gain(std::span<const Symbol> block)
    {
        load_buffer();
        std::size_t first = buffer_.size();
        buffer_.insert(buffer_.end(), block.begin(), block.end());
        scratch_.clear();
        std::uint64_t count = 0;
        for (std::size_t j = first; j < buffer_.size(); ++j) {
            count += fresh_at(j);
        }
        return count;
    }

    void append(std::span<const Symbol> block)
    {
        for (auto s : block) {
            seq_.push_back(s);
            for_each_subset_ending_at(std::span<const Symbol>(seq_), seq_.size() - 1, k_, t_,
                                      [&](const Subset& sub) { mark(sub); });
        }
    }

    // Incremental block building: buffer holds tail + partial block.
    void begin_block()
    {
        load_buffer();
        scratch_.clear();
    }
    std::uint64_t trial_symbol(Symbol x)
    {
        buffer_.push_back(x);
        std::size_t mark_scratch = scratch_.size();
        std::uint64_t c = fresh_at(buffer_.size() - 1);
        scratch_.resize(mark_scratch);
        buffer_.pop_back();
        return c;
    }
    void push_symbol(Symbol x)
    {
        buffer_.push_back(x);
        fresh_at(buffer_.size() - 1);
    }

  private:
    void load_buffer()
    {
        buffer_.clear();
        std::size_t tail = std::min<std::size_t>(k_, seq_.size());
        buffer_.insert(buffer_.end(), seq_.end() - static_cast<std::ptrdiff_t>(tail), seq_.end());
    }

    std::uint64_t fresh_at(std::size_t j)
    {
        std::uint64_t count = 0;
        for_each_subset_ending_at(std::span<const Symbol>(buffer_), j, k_, t_, [&](const Subset& sub) {
            auto r = cover_.indexer().rank(sub);
            if (!cover_.test(r) && std::find(scratch_.begin(), scratch_.end(), r) == scratch_.end()) {
                scratch_.push_back(r);
                ++count;
            }
        });
        return count;
    }

    void mark(const Subset& sub)
    {
        auto r = cover_.indexer().rank(sub);
        if (!cover_.insert(r)) {
            return;
        }
        auto pos = position_[r];
        auto last = uncovered_.back();
        uncovered_[pos] = last;
        position_[last] = pos;
        uncovered_.pop_back();
        for (auto s : sub) {
            --uncovered_degree_[s];
        }
    }

    std::uint32_t n_;
    std::uint32_t k_;
    std::uint32_t t_;
    CoverageSet cover_;
    std::vector<std::uint64_t> position_;
    std::vector<std::uint64_t> uncovered_;
    std::vector<std::uint64_t> uncovered_degree_;
    std::vector<Symbol> seq_;
    std::vector<Symbol> buffer_;
    std::vector<std::uint64_t> scratch_;
};

std::vector<Symbol> random_block(Rng& rng, std::uint32_t n, std::uint32_t ell)
{
    // Partial Fisher-Yates over the alphabet.
    std::vector<Symbol> pool(n);
    std::iota(pool.begin(), pool.end(), Symbol{0});
    for (std::uint32_t i = 0; i < ell; ++i) {
        auto j = i + uniform_below(rng, n - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(ell);
    return pool;
}

// Places an uncovered subset at the front of the block, then fills each
// remaining slot with the symbol covering the most fresh subsets, preferring
// symbols that still appear in many uncovered subsets.
std::vector<Symbol> seeded_block(Rng& rng, Tracker& tracker, std::uint32_t n, std::uint32_t ell)
{
    Subset start = tracker.random_uncovered(rng);
    std::shuffle(start.begin(), start.end(), rng);
    std::vector<Symbol> block;
    std::vector<bool> used(n, false);
    tracker.begin_block();
    for (auto s : start) {
        block.push_back(s);
        used[s] = true;
        tracker.push_symbol(s);
    }
    while (block.size() < ell) {
        Symbol best = n;
        std::uint64_t best_gain = 0;
        std::uint64_t best_degree = 0;
        std::uint64_t best_key = 0;
        for (Symbol x = 0; x < n; ++x) {
            if (used[x]) {
                continue;
            }
            std::uint64_t g = tracker.trial_symbol(x);
            std::uint64_t d = tracker.uncovered_degree(x);
            std::uint64_t key = rng();
            if (best == n || g > best_gain || (g == best_gain && (d > best_degree || (d == best_degree && key > best_key)))) {
                best = x;
                best_gain = g;
                best_degree = d;
                best_key = key;
            }
        }
        block.push_back(best);
        used[best] = true;
        tracker.push_symbol(best);
    }
    return block;
}

struct Setup {
    std::uint32_t ell = 0;
    std::uint64_t r = 0;
};

Setup prepare(const RadiusSpec& spec, const ConstructConfig& cfg)
{
    spec.validate();
    Setup s;
    s.ell = cfg.ell == 0 ? default_block_length(spec.n, spec.k) : cfg.ell;
    if (cfg.pool_size < 1) {
        throw parameter_error("pool size must be at least 1");
    }
    if (spec.n > spec.k + 1) {
        if (s.ell < spec.k + 1 || s.ell > spec.n) {
            throw parameter_error("block length must satisfy k+1 <= ell <= n (got ell=" + std::to_string(s.ell) + ")");
        }
        s.r = uniformity_r(s.ell, spec.k, spec.t);
    }
    return s;
}

// Alphabets that fit in one window are covered by a single permutation.
std::optional<std::vector<Symbol>> single_window(const RadiusSpec& spec)
{
    if (spec.n > spec.k + 1) {
        return std::nullopt;
    }
    std::vector<Symbol> seq(spec.n);
    std::iota(seq.begin(), seq.end(), Symbol{0});
    return seq;
}

ConstructResult finish(const RadiusSpec& spec, std::vector<Symbol> symbols, std::uint64_t blocks)
{
    ConstructResult res;
    res.sequence = Sequence(std::move(symbols), spec.n);
    res.blocks_used = blocks;
    res.length = res.sequence.size();
    if (spec.n >= spec.t) {
        Rational target = asymptotic_target(spec.n, spec.k, spec.t);
        res.ratio = Rational(BigInt(res.length) * target.den, target.num).to_decimal(6);
    }
    res.verified = verify_radius(res.sequence, spec).valid;
    if (!res.verified) {
        throw std::logic_error("constructed sequence failed verification");
    }
    return res;
}

void greedy_steps(Tracker& tracker, Rng& rng, const RadiusSpec& spec, const ConstructConfig& cfg, const Setup& setup,
                  std::uint64_t& blocks)
{
    while (tracker.uncovered() > 0 && tracker.uncovered() >= setup.r) {
        std::vector<Symbol> best;
        std::uint64_t best_gain = 0;
        for (std::uint32_t c = 0; c < cfg.pool_size; ++c) {
            bool seeded = c % 2 == 0;
            auto block = seeded ? seeded_block(rng, tracker, spec.n, setup.ell) : random_block(rng, spec.n, setup.ell);
            auto g = tracker.gain(block);
            if (best.empty() || g > best_gain || (g == best_gain && block < best)) {
                best = std::move(block);
                best_gain = g;
            }
        }
        tracker.append(best);
        ++blocks;
    }
}

void finisher(Tracker& tracker, std::uint64_t& blocks)
{
    for (const auto& sub : tracker.cover().missing()) {
        if (!tracker.cover().contains(sub)) {
            tracker.append(sub);
            ++blocks;
        }
    }
}

std::vector<Symbol> degenerate_alphabet(const RadiusSpec& spec)
{
    std::vector<Symbol> seq(spec.n);
    std::iota(seq.begin(), seq.end(), Symbol{0});
    return seq;
}

}  // namespace

std::string to_string(Method m)
{
    switch (m) {
    case Method::greedy:
        return "greedy";
    case Method::nibble:
        return "nibble";
    case Method::exact:
        return "exact";
    case Method::packing_greedy:
        return "packing-greedy";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    if (name == "greedy") {
        return Method::greedy;
    }
    if (name == "nibble") {
        return Method::nibble;
    }
    if (name == "exact") {
        return Method::exact;
    }
    if (name == "packing-greedy" || name == "packing") {
        return Method::packing_greedy;
    }
    throw parameter_error("unknown method '" + std::string(name) + "'");
}

std::uint32_t default_block_length(std::uint32_t n, std::uint32_t k)
{
    return std::max(k + 1, std::min(n, 4 * k));
}

double nibble_threshold(std::uint32_t round)
{
    return std::max(0.5 * std::pow(0.9, round), 0.05);
}

ConstructResult construct_greedy(const RadiusSpec& spec, const ConstructConfig& cfg)
{
    Setup setup = prepare(spec, cfg);
    if (spec.n < spec.t) {
        return finish(spec, degenerate_alphabet(spec), 1);
    }
    if (auto one = single_window(spec)) {
        return finish(spec, std::move(*one), 1);
    }
    Rng rng(cfg.seed);
    Tracker tracker(spec.n, spec.k, spec.t);
    std::uint64_t blocks = 0;
    greedy_steps(tracker, rng, spec, cfg, setup, blocks);
    finisher(tracker, blocks);
    return finish(spec, tracker.sequence(), blocks);
}

ConstructResult construct_nibble(const RadiusSpec& spec, const ConstructConfig& cfg)
{
    Setup setup = prepare(spec, cfg);
    if (!(cfg.bite > 0.0 && cfg.bite < 1.0)) {
        throw parameter_error("nibble bite must lie in (0, 1)");
    }
    if (spec.n < spec.t) {
        return finish(spec, degenerate_alphabet(spec), 1);
    }
    if (auto one = single_window(spec)) {
        return finish(spec, std::move(*one), 1);
    }
    Rng rng(cfg.seed);
    Tracker tracker(spec.n, spec.k, spec.t);
    std::uint64_t blocks = 0;
    const auto r = static_cast<double>(setup.r);
    constexpr std::uint32_t kMaxRounds = 10'000;
    constexpr double kNibbleStallYield = 0.5;
    const auto per_symbol = static_cast<double>(binomial_u64(spec.k, spec.t - 1));
    for (std::uint32_t round = 0; round < kMaxRounds && tracker.uncovered() >= setup.r; ++round) {
        const double threshold = nibble_threshold(round);
        const auto samples = static_cast<std::uint64_t>(
            std::max(1.0, std::ceil(cfg.bite * static_cast<double>(tracker.uncovered()) / r)));
        const std::uint64_t before = tracker.uncovered();
        std::uint64_t appended = 0;
        for (std::uint64_t i = 0; i < samples; ++i) {
            auto block = random_block(rng, spec.n, setup.ell);
            auto g = static_cast<double>(tracker.gain(block));
            if (g / r > threshold) {
                tracker.append(block);
                ++blocks;
                appended += block.size();
            }
        }
        // Stalled: the round covered less than half of what its appended
        // symbols could cover at best.
        const double covered = static_cast<double>(before - tracker.uncovered());
        if (appended == 0 || covered < kNibbleStallYield * per_symbol * static_cast<double>(appended)) {
            break;
        }
    }
    greedy_steps(tracker, rng, spec, cfg, setup, blocks);
    finisher(tracker, blocks);
    return finish(spec, tracker.sequence(), blocks);
}

double exact_state_estimate(const RadiusSpec& spec)
{
    double subsets = binomial(spec.n, spec.t).convert_to<double>();
    return std::pow(2.0, subsets) * std::pow(static_cast<double>(spec.n), spec.k);
}

bool exact_feasible(const RadiusSpec& spec)
{
    return binomial(spec.n, spec.t) <= 24 && std::pow(static_cast<double>(spec.n), spec.k) <= 1e5;
}

ConstructResult construct_exact(const RadiusSpec& spec, const ConstructConfig& cfg)
{
    spec.validate();
    if (spec.n < spec.t) {
        return finish(spec, degenerate_alphabet(spec), 1);
    }
    if (!exact_feasible(spec)) {
        throw size_error("exact search needs C(n,t) <= 24 and n^k <= 1e5; state estimate " +
                         std::to_string(exact_state_estimate(spec)));
    }
    const std::uint32_t n = spec.n;
    const std::uint32_t k = spec.k;
    const std::uint32_t t = spec.t;
    SubsetIndexer index(n, t);
    const std::uint64_t full = (std::uint64_t{1} << index.size()) - 1;

    // symbols occurring in each subset, as bitmasks over the alphabet
    std::vector<std::uint32_t> subset_symbols(index.size());
    for (std::uint64_t r = 0; r < index.size(); ++r) {
        for (auto s : index.unrank(r)) {
            subset_symbols[r] |= 1u << s;
        }
    }

    // Window: ordered last min(k, m) symbols, oldest first, base n+1 with
    // digit n meaning "empty".
    const std::uint64_t base = n + 1;
    auto encode = [&](const std::vector<Symbol>& w) {
        std::uint64_t code = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint64_t digit = i < k - w.size() ? n : w[i - (k - w.size())];
            code = code * base + digit;
        }
        return code;
    };
    auto decode = [&](std::uint64_t code) {
        std::vector<Symbol> w(k);
        for (std::uint32_t i = k; i > 0; --i) {
            w[i - 1] = static_cast<Symbol>(code % base);
            code /= base;
        }
        std::vector<Symbol> out;
        for (auto d : w) {
            if (d != n) {
                out.push_back(d);
            }
        }
        return out;
    };
    constexpr int kWindowBits = 40;
    auto key_of = [&](std::uint64_t mask, std::uint64_t code) { return (mask << kWindowBits) | code; };

    // A* over unit-cost appends. One symbol covers at most C(k,t-1) new
    // subsets, so ceil(uncovered / C(k,t-1)) never overestimates and drops by
    // at most one per step; the first goal popped is optimal.
    const std::uint64_t per_symbol = binomial_u64(k, t - 1);
    auto estimate = [&](std::uint64_t mask) {
        auto left = static_cast<std::uint64_t>(std::popcount(full & ~mask));
        return static_cast<std::uint32_t>((left + per_symbol - 1) / per_symbol);
    };
    struct Node {
        std::uint64_t parent;
        std::uint32_t depth;
        Symbol symbol;
    };
    std::unordered_map<std::uint64_t, Node> nodes;
    const std::uint64_t start = key_of(0, encode({}));
    nodes.emplace(start, Node{start, 0, 0});
    std::vector<std::vector<std::uint64_t>> buckets(estimate(0) + 1);
    buckets[estimate(0)].push_back(start);
    std::vector<Symbol> window;
    std::vector<Symbol> extended;
    std::optional<std::uint64_t> goal;

    for (std::size_t f = 0; f < buckets.size() && !goal; ++f) {
        while (!buckets[f].empty() && !goal) {
            const std::uint64_t key = buckets[f].back();
            buckets[f].pop_back();
            const std::uint64_t mask = key >> kWindowBits;
            const Node node = nodes.at(key);
            if (node.depth + estimate(mask) != f) {
                continue;  // reached again later with a shorter prefix
            }
            if (mask == full) {
                goal = key;
                break;
            }
            window = decode(key & ((std::uint64_t{1} << kWindowBits) - 1));

            // Symbols outside the window and outside every covered subset are
            // interchangeable, so only the smallest of them is tried.
            std::uint32_t known = 0;
            for (auto s : window) {
                known |= 1u << s;
            }
            for (std::uint64_t r = 0; r < index.size(); ++r) {
                if (mask >> r & 1u) {
                    known |= subset_symbols[r];
                }
            }
            bool fresh_tried = false;
            for (Symbol x = 0; x < n; ++x) {
                if (!(known >> x & 1u)) {
                    if (fresh_tried) {
                        continue;
                    }
                    fresh_tried = true;
                }
                extended = window;
                extended.push_back(x);
                std::uint64_t child_mask = mask;
                for_each_subset_ending_at(std::span<const Symbol>(extended), extended.size() - 1, k, t,
                                          [&](const Subset& sub) { child_mask |= std::uint64_t{1} << index.rank(sub); });
                if (extended.size() > k) {
                    extended.erase(extended.begin());
                }
                const std::uint64_t child = key_of(child_mask, encode(extended));
                const std::uint32_t depth = node.depth + 1;
                auto [it, inserted] = nodes.try_emplace(child, Node{key, depth, x});
                if (!inserted) {
                    if (it->second.depth <= depth) {
                        continue;
                    }
                    it->second = Node{key, depth, x};
                }
                if (nodes.size() > cfg.max_states) {
                    throw size_error("exact search exceeded " + std::to_string(cfg.max_states) + " states");
                }
                const std::size_t child_f = depth + estimate(child_mask);
                if (child_f >= buckets.size()) {
                    buckets.resize(child_f + 1);
                }
                buckets[child_f].push_back(child);
            }
        }
    }
    if (!goal) {
        throw std::logic_error("exact search exhausted without covering every subset");
    }
    std::vector<Symbol> seq;
    for (auto key = *goal; key != start; key = nodes.at(key).parent) {
        seq.push_back(nodes.at(key).symbol);
    }
    std::reverse(seq.begin(), seq.end());
    return finish(spec, std::move(seq), 1);
}

Sequence construct_packing_greedy(std::uint32_t n, std::uint32_t k, std::uint32_t t, std::uint64_t seed)
{
    if (k < 1 || t < 2 || t > k + 1 || k + 1 > n) {
        throw parameter_error("packing needs 2 <= t <= k+1 <= n");
    }
    Rng rng(seed);
    CoverageSet seen(n, t);
    std::vector<Symbol> seq{static_cast<Symbol>(uniform_below(rng, n))};
    std::vector<std::uint64_t> created;
    std::vector<std::uint64_t> best_created;
    while (true) {
        Symbol best = n;
        best_created.clear();
        for (Symbol x = 0; x < n; ++x) {
            seq.push_back(x);
            created.clear();
            bool admissible = true;
            for_each_tuple_ending_at(std::span<const Symbol>(seq), seq.size() - 1, k, t, [&](const Subset& sub) {
                if (!admissible) {
                    return;
                }
                auto r = seen.indexer().rank(sub);
                if (seen.test(r) || std::find(created.begin(), created.end(), r) != created.end()) {
                    admissible = false;
                    return;
                }
                created.push_back(r);
            });
            seq.pop_back();
            if (admissible && created.size() > best_created.size()) {
                best = x;
                best_created = created;
            }
        }
        if (best == n) {
            break;
        }
        seq.push_back(best);
        for (auto r : best_created) {
            seen.insert(r);
        }
    }
    Sequence out(std::move(seq), n);
    if (!verify_packing(out, k, t).valid) {
        throw std::logic_error("packing construction produced a repeated subset");
    }
    return out;
}

ConstructResult construct(const RadiusSpec& spec, const ConstructConfig& cfg)
{
    switch (cfg.method) {
    case Method::greedy:
        return construct_greedy(spec, cfg);
    case Method::nibble:
        return construct_nibble(spec, cfg);
    case Method::exact:
        return construct_exact(spec, cfg);
    case Method::packing_greedy: {
        spec.validate();
        ConstructResult res;
        res.sequence = construct_packing_greedy(spec.n, spec.k, spec.t, cfg.seed);
        res.length = res.sequence.size();
        res.blocks_used = 1;
        Rational target = asymptotic_target(spec.n, spec.k, spec.t);
        res.ratio = Rational(BigInt(res.length) * target.den, target.num).to_decimal(6);
        res.verified = verify_packing(res.sequence, spec.k, spec.t).valid;
        return res;
    }
    }
    throw parameter_error("unknown method");
}

}  // namespace radiusseq
