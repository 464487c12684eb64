#include "radiusseq/core.hpp"

#include <limits>
#include <string>
#include <unordered_map>

namespace radiusseq {

namespace {

// Largest coverage bitmap we are willing to allocate (bits).
constexpr std::uint64_t kMaxSubsets = std::uint64_t{1} << 32;

std::uint64_t checked_binomial(std::uint32_t n, std::uint32_t t)
{
    if (t > n) {
        return 0;
    }
    t = std::min(t, n - t);
    unsigned __int128 acc = 1;
    for (std::uint32_t i = 1; i <= t; ++i) {
        acc = acc * (n - t + i) / i;
        if (acc > kMaxSubsets) {
            throw size_error("C(" + std::to_string(n) + "," + std::to_string(t) +
                             ") t-subsets exceed the coverage bitmap limit");
        }
    }
    return static_cast<std::uint64_t>(acc);
}

}  // namespace

Sequence::Sequence(std::vector<Symbol> symbols, std::uint32_t n) : symbols(std::move(symbols)), n(n) {}

void RadiusSpec::validate() const
{
    if (n < 1) {
        throw parameter_error("alphabet size n must be at least 1");
    }
    if (k < 1) {
        throw parameter_error("radius k must be at least 1");
    }
    if (t < 2 || t > k + 1) {
        throw parameter_error("subset size t must satisfy 2 <= t <= k+1 (got t=" + std::to_string(t) +
                              ", k=" + std::to_string(k) + ")");
    }
}

void check_symbols(const Sequence& seq)
{
    for (std::size_t i = 0; i < seq.symbols.size(); ++i) {
        if (seq.symbols[i] >= seq.n) {
            throw input_error("symbol " + std::to_string(seq.symbols[i]) + " at position " + std::to_string(i) +
                              " is outside the alphabet [0, " + std::to_string(seq.n) + ")");
        }
    }
}

SubsetIndexer::SubsetIndexer(std::uint32_t n, std::uint32_t t) : n_(n), t_(t), size_(checked_binomial(n, t))
{
    binom_.assign(static_cast<std::size_t>(n + 1) * (t + 1), 0);
    for (std::uint32_t x = 0; x <= n; ++x) {
        binom_[x * (t + 1)] = 1;
        for (std::uint32_t j = 1; j <= t && j <= x; ++j) {
            std::uint64_t above = (j <= x - 1) ? binom_[(x - 1) * (t + 1) + j] : 0;
            binom_[x * (t + 1) + j] = binom_[(x - 1) * (t + 1) + j - 1] + above;
        }
    }
}

std::uint64_t SubsetIndexer::rank(std::span<const Symbol> sorted) const
{
    std::uint64_t r = 0;
    for (std::uint32_t i = 0; i < t_; ++i) {
        r += binom_[sorted[i] * (t_ + 1) + i + 1];
    }
    return r;
}

Subset SubsetIndexer::unrank(std::uint64_t rank) const
{
    Subset out(t_);
    std::uint32_t x = n_;
    for (std::uint32_t i = t_; i > 0; --i) {
        // largest x with C(x, i) <= rank
        do {
            --x;
        } while (binom_[x * (t_ + 1) + i] > rank);
        out[i - 1] = x;
        rank -= binom_[x * (t_ + 1) + i];
    }
    return out;
}

CoverageSet::CoverageSet(std::uint32_t n, std::uint32_t t) : index_(n, t), bits_(index_.size()) {}

bool CoverageSet::insert(std::uint64_t rank)
{
    if (bits_.test(rank)) {
        return false;
    }
    bits_.set(rank);
    ++count_;
    return true;
}

namespace {

template <typename Pred>
std::vector<Subset> lex_filter(const SubsetIndexer& index, Pred&& keep)
{
    std::vector<Subset> out;
    const std::uint32_t n = index.n();
    const std::uint32_t t = index.t();
    if (t > n) {
        return out;
    }
    Subset cur;
    detail::for_each_combination(n, t, [&](std::span<const std::size_t> idx) {
        cur.assign(idx.begin(), idx.end());
        if (keep(index.rank(cur))) {
            out.push_back(cur);
        }
    });
    return out;
}

}  // namespace

std::vector<Subset> CoverageSet::members() const
{
    return lex_filter(index_, [this](std::uint64_t r) { return bits_.test(r); });
}

std::vector<Subset> CoverageSet::missing() const
{
    if (count_ == index_.size()) {
        return {};
    }
    return lex_filter(index_, [this](std::uint64_t r) { return !bits_.test(r); });
}

void accumulate_coverage(std::span<const Symbol> seq, std::uint32_t k, CoverageSet& cover)
{
    const auto t = cover.indexer().t();
    for (std::size_t j = 0; j < seq.size(); ++j) {
        for_each_subset_ending_at(seq, j, k, t, [&](const Subset& s) { cover.insert(s); });
    }
}

std::vector<Subset> enumerate_covered_subsets(const Sequence& seq, std::uint32_t k, std::uint32_t t)
{
    if (k < 1 || t < 1) {
        throw parameter_error("enumerate_covered_subsets needs k >= 1 and t >= 1");
    }
    check_symbols(seq);
    if (seq.empty() || t > seq.n) {
        return {};
    }
    CoverageSet cover(seq.n, t);
    accumulate_coverage(seq.view(), k, cover);
    return cover.members();
}

CoverageReport verify_radius(const Sequence& seq, const RadiusSpec& spec)
{
    spec.validate();
    Sequence bound{seq.symbols, spec.n};
    check_symbols(bound);

    CoverageReport report;
    if (spec.n < spec.t) {
        // Degenerate alphabet: no t-subsets exist, the x = y reading of the
        // definition still requires every symbol to occur.
        std::vector<bool> seen(spec.n, false);
        for (auto s : seq.symbols) {
            seen[s] = true;
        }
        for (Symbol s = 0; s < spec.n; ++s) {
            if (!seen[s]) {
                report.uncovered.push_back({s});
            }
        }
        report.valid = report.uncovered.empty();
        return report;
    }

    CoverageSet cover(spec.n, spec.t);
    accumulate_coverage(seq.view(), spec.k, cover);
    report.covered_count = cover.count();
    report.total = cover.total();
    report.uncovered = cover.missing();
    report.valid = report.uncovered.empty();
    report.truncated_window = spec.t >= 3 && seq.size() <= spec.k && cover.count() > 0;
    return report;
}

std::vector<Subset> coverage_deficit(const Sequence& seq, const RadiusSpec& spec)
{
    return verify_radius(seq, spec).uncovered;
}

PackingReport verify_packing(const Sequence& seq, std::uint32_t k, std::uint32_t t)
{
    if (k < 1 || t < 2) {
        throw parameter_error("verify_packing needs k >= 1 and t >= 2");
    }
    PackingReport report;
    if (seq.empty()) {
        return report;
    }
    Symbol max_symbol = *std::max_element(seq.symbols.begin(), seq.symbols.end());
    std::uint32_t n = std::max<std::uint32_t>(seq.n, max_symbol + 1);
    if (t > n) {
        return report;
    }
    CoverageSet seen(n, t);
    auto view = seq.view();
    for (std::size_t j = 0; j < view.size() && report.valid; ++j) {
        for_each_tuple_ending_at(view, j, k, t, [&](const Subset& s) {
            if (report.valid && !seen.insert(s)) {
                report.valid = false;
                report.witness = s;
            }
        });
    }
    return report;
}

}  // namespace radiusseq
