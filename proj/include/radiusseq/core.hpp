#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace radiusseq {

using Symbol = std::uint32_t;

/// A t-subset of the alphabet, always kept sorted ascending.
using Subset = std::vector<Symbol>;

/// Bad input data (out-of-range symbol, malformed file).
class input_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Parameter combination outside an operation's domain.
class parameter_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Instance too large for an exhaustive method.
class size_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct Sequence {
    std::vector<Symbol> symbols;
    std::uint32_t n = 0;

    Sequence() = default;
    Sequence(std::vector<Symbol> symbols, std::uint32_t n);

    [[nodiscard]] std::size_t size() const noexcept { return symbols.size(); }
    [[nodiscard]] bool empty() const noexcept { return symbols.empty(); }
    [[nodiscard]] std::span<const Symbol> view() const noexcept { return symbols; }

    bool operator==(const Sequence&) const = default;
};

struct RadiusSpec {
    std::uint32_t n = 1;
    std::uint32_t k = 1;
    std::uint32_t t = 2;

    /// Throws parameter_error unless n >= 1, k >= 1 and 2 <= t <= k+1.
    void validate() const;
};

struct CoverageReport {
    bool valid = false;
    std::uint64_t covered_count = 0;
    std::uint64_t total = 0;
    std::vector<Subset> uncovered;
    /// True when the whole sequence is shorter than one window and some
    /// subset was accepted from that truncated window.
    bool truncated_window = false;
};

/// Colex ranking of sorted t-subsets of {0..n-1} into [0, C(n,t)).
class SubsetIndexer {
  public:
    SubsetIndexer(std::uint32_t n, std::uint32_t t);

    [[nodiscard]] std::uint32_t n() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t t() const noexcept { return t_; }
    [[nodiscard]] std::uint64_t size() const noexcept { return size_; }

    /// `sorted` must be strictly increasing with length t.
    [[nodiscard]] std::uint64_t rank(std::span<const Symbol> sorted) const;
    [[nodiscard]] Subset unrank(std::uint64_t rank) const;

  private:
    std::uint32_t n_;
    std::uint32_t t_;
    std::uint64_t size_;
    // binom_[x * (t_ + 1) + j] = C(x, j)
    std::vector<std::uint64_t> binom_;
};

/// Bitmap of covered t-subsets, indexed by colex rank.
class CoverageSet {
  public:
    CoverageSet(std::uint32_t n, std::uint32_t t);

    [[nodiscard]] const SubsetIndexer& indexer() const noexcept { return index_; }
    [[nodiscard]] std::uint64_t total() const noexcept { return index_.size(); }
    [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
    [[nodiscard]] bool full() const noexcept { return count_ == index_.size(); }

    [[nodiscard]] bool test(std::uint64_t rank) const { return bits_.test(rank); }
    [[nodiscard]] bool contains(std::span<const Symbol> sorted) const
    {
        return bits_.test(index_.rank(sorted));
    }
    /// Returns true if the subset was newly inserted.
    bool insert(std::uint64_t rank);
    bool insert(std::span<const Symbol> sorted) { return insert(index_.rank(sorted)); }

    /// Members in lexicographic order.
    [[nodiscard]] std::vector<Subset> members() const;
    /// Non-members in lexicographic order.
    [[nodiscard]] std::vector<Subset> missing() const;

  private:
    SubsetIndexer index_;
    boost::dynamic_bitset<std::uint64_t> bits_;
    std::uint64_t count_ = 0;
};

/// Calls `fn(const Subset&)` once for every t-subset of distinct symbols that
/// is formed by position `j` together with t-1 earlier positions within
/// distance k. Each index tuple is reported separately, so a subset can be
/// reported more than once when the window holds repeated symbols.
template <typename Fn>
void for_each_tuple_ending_at(std::span<const Symbol> seq, std::size_t j, std::uint32_t k,
                              std::uint32_t t, Fn&& fn);

/// Calls `fn(const Subset&)` for each distinct subset that becomes coverable
/// once position `j` is present, i.e. subsets containing seq[j] drawn from
/// the distinct symbols of the k positions before j. Used for coverage.
template <typename Fn>
void for_each_subset_ending_at(std::span<const Symbol> seq, std::size_t j, std::uint32_t k,
                               std::uint32_t t, Fn&& fn);

/// Every t-subset lying inside some window of k+1 consecutive positions
/// (trailing windows truncated at the end of the sequence). Lexicographic.
std::vector<Subset> enumerate_covered_subsets(const Sequence& seq, std::uint32_t k, std::uint32_t t);

/// Adds the covered subsets of `seq` to `cover`.
void accumulate_coverage(std::span<const Symbol> seq, std::uint32_t k, CoverageSet& cover);

CoverageReport verify_radius(const Sequence& seq, const RadiusSpec& spec);

std::vector<Subset> coverage_deficit(const Sequence& seq, const RadiusSpec& spec);

struct PackingReport {
    bool valid = true;
    std::optional<Subset> witness;
};

PackingReport verify_packing(const Sequence& seq, std::uint32_t k, std::uint32_t t);

/// Throws input_error if any symbol is >= seq.n.
void check_symbols(const Sequence& seq);

// ---------------------------------------------------------------------------

namespace detail {

// Enumerates (choose)-subsets of `pool` (by index) in lexicographic order of
// indices, calling fn(span of chosen indices).
template <typename Fn>
void for_each_combination(std::size_t pool, std::size_t choose, Fn&& fn)
{
    if (choose > pool) {
        return;
    }
    std::vector<std::size_t> idx(choose);
    for (std::size_t i = 0; i < choose; ++i) {
        idx[i] = i;
    }
    while (true) {
        fn(std::span<const std::size_t>(idx));
        std::size_t i = choose;
        while (i > 0 && idx[i - 1] == pool - choose + i - 1) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++idx[i - 1];
        for (std::size_t j = i; j < choose; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

inline void insert_sorted(Subset& s, Symbol x)
{
    auto pos = s.begin();
    while (pos != s.end() && *pos < x) {
        ++pos;
    }
    s.insert(pos, x);
}

}  // namespace detail

template <typename Fn>
void for_each_tuple_ending_at(std::span<const Symbol> seq, std::size_t j, std::uint32_t k,
                              std::uint32_t t, Fn&& fn)
{
    std::size_t lo = j >= k ? j - k : 0;
    std::size_t pool = j - lo;
    Subset chosen;
    chosen.reserve(t);
    detail::for_each_combination(pool, t - 1, [&](std::span<const std::size_t> idx) {
        chosen.clear();
        chosen.push_back(seq[j]);
        for (auto i : idx) {
            Symbol s = seq[lo + i];
            for (auto c : chosen) {
                if (c == s) {
                    return;
                }
            }
            chosen.push_back(s);
        }
        Subset sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        fn(static_cast<const Subset&>(sorted));
    });
}

template <typename Fn>
void for_each_subset_ending_at(std::span<const Symbol> seq, std::size_t j, std::uint32_t k,
                               std::uint32_t t, Fn&& fn)
{
    std::size_t lo = j >= k ? j - k : 0;
    std::vector<Symbol> others;
    others.reserve(k);
    for (std::size_t i = lo; i < j; ++i) {
        Symbol s = seq[i];
        if (s != seq[j] && std::find(others.begin(), others.end(), s) == others.end()) {
            others.push_back(s);
        }
    }
    std::sort(others.begin(), others.end());
    Subset chosen;
    chosen.reserve(t);
    detail::for_each_combination(others.size(), t - 1, [&](std::span<const std::size_t> idx) {
        chosen.clear();
        for (auto i : idx) {
            chosen.push_back(others[i]);
        }
        detail::insert_sorted(chosen, seq[j]);
        fn(static_cast<const Subset&>(chosen));
    });
}

}  // namespace radiusseq
