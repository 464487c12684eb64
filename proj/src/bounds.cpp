#include "radiusseq/bounds.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "radiusseq/core.hpp"

namespace radiusseq {

BigInt binomial(std::uint64_t n, std::uint64_t t)
{
    if (t > n) {
        return 0;
    }
    t = std::min(t, n - t);
    BigInt acc = 1;
    for (std::uint64_t i = 1; i <= t; ++i) {
        acc *= n - t + i;
        acc /= i;
    }
    return acc;
}

std::uint64_t binomial_u64(std::uint64_t n, std::uint64_t t)
{
    BigInt b = binomial(n, t);
    if (b > std::numeric_limits<std::uint64_t>::max()) {
        throw size_error("C(" + std::to_string(n) + "," + std::to_string(t) + ") does not fit in 64 bits");
    }
    return b.convert_to<std::uint64_t>();
}

BigInt falling_factorial(std::uint64_t n, std::uint64_t count)
{
    BigInt acc = 1;
    for (std::uint64_t i = 0; i < count; ++i) {
        if (n < i) {
            return 0;
        }
        acc *= n - i;
    }
    return acc;
}

Rational::Rational(BigInt num_, BigInt den_) : num(std::move(num_)), den(std::move(den_))
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    BigInt g = boost::multiprecision::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

double Rational::to_double() const
{
    return num.convert_to<double>() / den.convert_to<double>();
}

std::string Rational::to_string() const
{
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

std::string Rational::to_decimal(unsigned digits) const
{
    BigInt whole = num / den;
    BigInt rem = num % den;
    std::string out = whole.str();
    if (digits == 0) {
        return out;
    }
    out += '.';
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + (rem / den).convert_to<int>());
        rem %= den;
    }
    return out;
}

std::string to_string(BoundMethod m)
{
    switch (m) {
    case BoundMethod::lemma_pairs:
        return "lemma_pairs";
    case BoundMethod::ghosh_exact:
        return "ghosh_exact";
    case BoundMethod::rate_subsets:
        return "rate_subsets";
    }
    return "unknown";
}

std::uint64_t lower_bound_pairs(std::uint32_t n, std::uint32_t k)
{
    if (k < 1) {
        throw parameter_error("radius k must be at least 1");
    }
    if (n < 2) {
        return 1;
    }
    return binomial_u64(n, 2) / k + 1;
}

std::uint64_t ghosh_f1(std::uint32_t n)
{
    if (n == 0) {
        throw parameter_error("alphabet size n must be at least 1");
    }
    if (n == 1) {
        return 1;
    }
    std::uint64_t pairs = binomial_u64(n, 2);
    return n % 2 == 1 ? pairs + 1 : pairs + n / 2;
}

std::uint64_t lower_bound_subsets(std::uint32_t n, std::uint32_t k, std::uint32_t t)
{
    if (t < 2 || t > k + 1) {
        throw parameter_error("rate bound needs 2 <= t <= k+1 (got t=" + std::to_string(t) +
                              ", k=" + std::to_string(k) + ")");
    }
    if (n < t) {
        throw parameter_error("rate bound needs n >= t");
    }
    if (n <= k + 1) {
        return n;
    }
    BigInt need = binomial(n, t) - binomial(k + 1, t);
    BigInt rate = binomial(k, t - 1);
    BigInt extra = (need + rate - 1) / rate;
    BigInt m = BigInt(k + 1) + extra;
    if (m > std::numeric_limits<std::uint64_t>::max()) {
        throw size_error("rate bound does not fit in 64 bits");
    }
    return std::max<std::uint64_t>(m.convert_to<std::uint64_t>(), n);
}

Rational asymptotic_target(std::uint32_t n, std::uint32_t k, std::uint32_t t)
{
    if (t < 2 || t > k + 1) {
        throw parameter_error("asymptotic target needs 2 <= t <= k+1");
    }
    return Rational(binomial(n, t), binomial(k, t - 1));
}

std::uint64_t best_lower_bound(std::uint32_t n, std::uint32_t k, std::uint32_t t)
{
    if (n < t) {
        return n;
    }
    std::uint64_t lb = lower_bound_subsets(n, k, t);
    if (t == 2) {
        lb = std::max(lb, lower_bound_pairs(n, k));
    }
    return lb;
}

BoundsReport bounds_report(std::uint32_t n, std::uint32_t k, std::uint32_t t,
                           std::optional<std::uint64_t> exact_length)
{
    RadiusSpec{n, k, t}.validate();
    if (n < t) {
        throw parameter_error("bounds need n >= t");
    }
    BoundsReport rep;
    rep.n = n;
    rep.k = k;
    rep.t = t;
    rep.rate_bound = lower_bound_subsets(n, k, t);
    rep.lemma_bound = t == 2 ? lower_bound_pairs(n, k) : 0;
    rep.lower_bound = std::max(rep.rate_bound, rep.lemma_bound);
    rep.method = rep.lemma_bound >= rep.rate_bound ? BoundMethod::lemma_pairs : BoundMethod::rate_subsets;
    rep.asymptotic_target = asymptotic_target(n, k, t);

    if (k == 1 && t == 2) {
        rep.exact_known = ghosh_f1(n);
        rep.exact_source = "ghosh";
        rep.method = BoundMethod::ghosh_exact;
    }
    if (exact_length) {
        if (rep.exact_known && *rep.exact_known != *exact_length) {
            throw std::logic_error("exact search disagrees with the closed form for f_1(n)");
        }
        if (!rep.exact_known) {
            rep.exact_known = exact_length;
            rep.exact_source = "search";
        }
    }
    if (rep.exact_known && *rep.exact_known < rep.lower_bound) {
        throw std::logic_error("exact length below the counting lower bound");
    }
    return rep;
}

}  // namespace radiusseq
