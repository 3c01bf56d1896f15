#pragma once

// Constants of the F_3 symmetric random-matrix model and Monte Carlo checks.
//
// beta = prod_{i>=0} (1 - 3^-(2i+1)) = prod_{j>=1} (1 + 3^-j)^-1 and
// beta_m = beta / prod_{j=1}^m (3^j - 1) is the limiting probability that a
// large uniform symmetric matrix over F_3 has corank m. Partial products are
// exact rationals; decimals appear only when reporting.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "f3.hpp"
#include "integer.hpp"

namespace zeta3pell {

/// Decimal expansion of x rounded to the given number of fractional digits
/// (halves away from zero).
inline std::string to_decimal(const BigRational& x, unsigned digits) {
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    const bool neg = num < 0;
    if (neg) num = -num;
    BigInt scale = boost::multiprecision::pow(BigInt(10), digits);
    BigInt q = (2 * num * scale + den) / (2 * den);
    std::string s = q.str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits) s.insert(s.size() - digits, ".");
    return (neg && q != 0 ? "-" : "") + s;
}

inline double to_double(const BigRational& x) { return x.convert_to<double>(); }

inline BigRational pow3_inv(unsigned e) { return BigRational(BigInt(1), boost::multiprecision::pow(BigInt(3), e)); }

/// Partial product with its truncation interval: the infinite product lies in [lower, upper].
struct BetaValue {
    BigRational value;
    BigRational lower;
    BigRational upper;
    unsigned terms = 0;
};

/// prod_{i=0}^{terms-1} (1 - 3^-(2i+1)); the tail is >= 1 - (9/8) 3^-(2 terms + 1).
inline BetaValue beta_first_form(unsigned terms) {
    if (terms == 0) throw std::domain_error("beta: terms must be >= 1");
    BigRational p(1);
    for (unsigned i = 0; i < terms; ++i) p *= BigRational(1) - pow3_inv(2 * i + 1);
    BigRational tail_low = BigRational(1) - BigRational(9, 8) * pow3_inv(2 * terms + 1);
    return {p, p * tail_low, p, terms};
}

/// prod_{j=1}^{terms} (1 + 3^-j)^-1; the tail lies in [1 - 3^-terms / 2, 1].
inline BetaValue beta_second_form(unsigned terms) {
    if (terms == 0) throw std::domain_error("beta: terms must be >= 1");
    BigRational p(1);
    for (unsigned j = 1; j <= terms; ++j) p /= BigRational(1) + pow3_inv(j);
    BigRational tail_low = BigRational(1) - pow3_inv(terms) / 2;
    return {p, p * tail_low, p, terms};
}

/// First-form partial product, cross-checked against the second form: the two
/// truncation intervals must overlap.
inline BetaValue beta(unsigned terms) {
    BetaValue a = beta_first_form(terms);
    BetaValue b = beta_second_form(terms);
    if (a.upper < b.lower || b.upper < a.lower)
        throw std::logic_error("beta: product forms disagree beyond their truncation bounds");
    return a;
}

/// prod_{j=1}^m (3^j - 1)
inline BigInt corank_denominator(unsigned m) {
    BigInt d = 1;
    for (unsigned j = 1; j <= m; ++j) d *= boost::multiprecision::pow(BigInt(3), j) - 1;
    return d;
}

inline BigRational beta_m(const BigRational& beta_value, unsigned m) {
    return beta_value / BigRational(corank_denominator(m));
}

inline BigRational beta_m(unsigned m, unsigned terms = 40) { return beta_m(beta(terms).value, m); }

/// A computed quantity, the value it should equal, and a rigorous bound on
/// |value - expected| coming from truncation.
struct SeriesCheck {
    std::string name;
    BigRational value;
    BigRational expected;
    BigRational error_bound;

    BigRational deviation() const {
        BigRational d = value - expected;
        return d < 0 ? BigRational(-d) : d;
    }
    bool holds() const { return deviation() <= error_bound; }
};

struct ConstantsReport {
    unsigned truncation_terms = 0;
    unsigned series_terms = 0;
    unsigned precision_bits = 0;
    BetaValue beta;
    BetaValue beta_second;
    std::vector<BigRational> beta_m;
    SeriesCheck sum_beta_m;
    SeriesCheck upper_sum;
    SeriesCheck stevenhagen_sum;
    BigRational conjecture_value;  // 2 - 2 beta
    BigRational lambda_lower;      // 91 beta / 93
    BigRational lambda_upper;      // 95/124
    BigRational trivial_lower;     // 27 beta / 31
    BigRational trivial_upper;     // 97/124
    bool lower_identity = false;
    bool upper_identity = false;

    /// Decimal digits justified by precision_bits.
    unsigned digits() const { return std::max(1u, static_cast<unsigned>(precision_bits * 0.30102999566398120)); }
};

struct LambdaBounds {
    BigRational lower;            // recomposed from 27/31, 2/31, 2/31 weights
    BigRational lower_closed;     // 91 beta / 93
    BigRational upper;            // recomposed
    BigRational upper_closed;     // 95/124
    BigRational trivial_lower;    // 27 beta / 31
    BigRational trivial_upper;    // 97/124
    bool lower_identity = false;  // exact equality
    bool upper_identity = false;
};

inline LambdaBounds lambda_bound_checks(const BigRational& b) {
    LambdaBounds r;
    const BigRational w_tame(27, 31), w_side(2, 31);
    r.lower = w_tame * b + w_side * b + w_side * (BigRational(2, 3) * b);
    r.lower_closed = BigRational(91, 93) * b;
    r.upper = w_tame * BigRational(3, 4) + w_side * BigRational(3, 4) + w_side * BigRational(1);
    r.upper_closed = BigRational(95, 124);
    r.trivial_lower = BigRational(27, 31) * b;
    r.trivial_upper = w_tame * BigRational(3, 4) + w_side * BigRational(2);
    r.lower_identity = r.lower == r.lower_closed;
    r.upper_identity = r.upper == r.upper_closed;
    return r;
}

inline LambdaBounds lambda_bound_checks(unsigned terms = 40) { return lambda_bound_checks(beta(terms).value); }

/// Evaluates the series identities with beta truncated at `terms` factors and
/// the sums truncated after `series_terms` terms.
inline ConstantsReport series_checks(unsigned terms = 40, unsigned precision_bits = 128, unsigned series_terms = 40) {
    if (series_terms < 2) throw std::domain_error("series_checks: series_terms must be >= 2");
    ConstantsReport r;
    r.truncation_terms = terms;
    r.series_terms = series_terms;
    r.precision_bits = precision_bits;
    r.beta = beta(terms);
    r.beta_second = beta_second_form(terms);
    const BigRational& b = r.beta.value;
    const BigRational beta_err = r.beta.upper - r.beta.lower;

    BigRational sum(0), upper(0), stev(0);
    for (unsigned m = 0; m < series_terms; ++m) {
        BigRational bm = beta_m(b, m);
        r.beta_m.push_back(bm);
        sum += bm;
        upper += bm * pow3_inv(m);
        // 2 beta / ((3^(m+1) - 1) prod_{j=1}^m (3^j - 1))
        BigInt d = (boost::multiprecision::pow(BigInt(3), m + 1) - 1) * corank_denominator(m);
        stev += BigRational(2) * b / BigRational(d);
    }
    // beta_m <= beta_{series_terms} 3^-(m - series_terms) beyond the cut, so each
    // tail is at most 3/2 of its first omitted term; beta error scales every sum by at most e.
    const BigRational first_omitted = beta_m(r.beta.upper, series_terms);
    const BigRational tail = BigRational(3, 2) * first_omitted;
    const BigRational e = BigRational(3) * beta_err;

    r.sum_beta_m = {"sum_beta_m", sum, BigRational(1), tail + e};
    r.upper_sum = {"upper_sum", upper, BigRational(3, 4), tail + e};
    r.stevenhagen_sum = {"stevenhagen_sum", stev, BigRational(2) * (BigRational(1) - b),
                         BigRational(2) * tail + BigRational(4) * beta_err + BigRational(2) * e};
    r.conjecture_value = BigRational(2) - BigRational(2) * b;

    LambdaBounds lb = lambda_bound_checks(b);
    r.lambda_lower = lb.lower_closed;
    r.lambda_upper = lb.upper_closed;
    r.trivial_lower = lb.trivial_lower;
    r.trivial_upper = lb.trivial_upper;
    r.lower_identity = lb.lower_identity;
    r.upper_identity = lb.upper_identity;
    return r;
}

// ---------------------------------------------------------------------------
// Monte Carlo

/// Samples are split into fixed blocks; block b draws from mt19937_64 seeded with
/// seed_seq{seed, b}, so results depend on (seed, samples) and not on worker count.
inline constexpr std::uint64_t mc_block_size = 4096;

inline std::mt19937_64 block_engine(std::uint64_t seed, std::uint64_t block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    return std::mt19937_64(seq);
}

namespace detail {

// Runs body(block_index, first_sample, count) over all blocks, merging nothing;
// callers accumulate into per-block slots.
template <class Body>
void for_each_block(std::uint64_t samples, unsigned workers, Body&& body) {
    const std::uint64_t blocks = (samples + mc_block_size - 1) / mc_block_size;
    auto run = [&](std::uint64_t b) {
        const std::uint64_t first = b * mc_block_size;
        body(b, std::min(mc_block_size, samples - first));
    };
    workers = std::max(1u, workers);
    if (workers == 1 || blocks < 2) {
        for (std::uint64_t b = 0; b < blocks; ++b) run(b);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::uint64_t>(workers, blocks); ++t)
        pool.emplace_back([&] {
            for (std::uint64_t b; (b = next.fetch_add(1)) < blocks;) run(b);
        });
    for (auto& th : pool) th.join();
}

// Uniform double in [0, 1) from the top 53 bits.
inline double unit_interval(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

} // namespace detail

struct CorankComparison {
    std::size_t m = 0;
    double frequency = 0;
    double predicted = 0;  // beta_m
    double deviation() const { return frequency - predicted; }
};

struct MCRankReport {
    std::size_t n = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::map<std::size_t, std::uint64_t> corank_counts;
    std::vector<CorankComparison> comparison;  // m = 0..4

    double frequency(std::size_t m) const {
        auto it = corank_counts.find(m);
        return it == corank_counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(samples);
    }
};

inline MCRankReport corank_mc(std::size_t n, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1) {
    if (n == 0) throw std::domain_error("corank_mc: n must be >= 1");
    if (samples == 0) throw std::domain_error("corank_mc: samples must be >= 1");
    const std::uint64_t blocks = (samples + mc_block_size - 1) / mc_block_size;
    std::vector<std::map<std::size_t, std::uint64_t>> per_block(blocks);
    detail::for_each_block(samples, workers, [&](std::uint64_t b, std::uint64_t count) {
        auto gen = block_engine(seed, b);
        auto& counts = per_block[b];
        for (std::uint64_t s = 0; s < count; ++s) ++counts[n - rank(random_symmetric(n, gen))];
    });
    MCRankReport r;
    r.n = n;
    r.samples = samples;
    r.seed = seed;
    for (const auto& counts : per_block)
        for (auto [k, c] : counts) r.corank_counts[k] += c;
    const BigRational b = beta(40).value;
    for (std::size_t m = 0; m <= 4; ++m)
        r.comparison.push_back({m, r.frequency(m), to_double(beta_m(b, static_cast<unsigned>(m)))});
    return r;
}

struct SplittingReport {
    unsigned m = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    // Bernoulli(3^-m) given corank m
    std::uint64_t conditional_hits = 0;
    double conditional_frequency = 0;
    BigRational conditional_probability;
    // corank drawn from the beta_m law, then Bernoulli(3^-corank)
    std::uint64_t composite_hits = 0;
    double composite_frequency = 0;
    BigRational composite_mass;  // sum beta_m 3^-m, truncated
};

/// Model-arithmetic check: the refinement that, given corank m, the deeper
/// class-group invariant is also m with probability 3^-m. Not a number-theoretic test.
inline SplittingReport splitting_mc(unsigned m, std::uint64_t samples, std::uint64_t seed, unsigned workers = 1) {
    if (samples == 0) throw std::domain_error("splitting_mc: samples must be >= 1");
    constexpr unsigned law_terms = 30;
    const BigRational b = beta(40).value;
    std::vector<double> cdf, keep;
    double acc = 0;
    BigRational mass(0);
    for (unsigned k = 0; k < law_terms; ++k) {
        BigRational bk = beta_m(b, k);
        acc += to_double(bk);
        cdf.push_back(acc);
        mass += bk * pow3_inv(k);
        keep.push_back(to_double(pow3_inv(k)));
    }
    const double p_cond = to_double(pow3_inv(m));

    const std::uint64_t blocks = (samples + mc_block_size - 1) / mc_block_size;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> per_block(blocks);
    detail::for_each_block(samples, workers, [&](std::uint64_t blk, std::uint64_t count) {
        auto gen = block_engine(seed, blk);
        auto& [cond, comp] = per_block[blk];
        for (std::uint64_t s = 0; s < count; ++s) {
            if (detail::unit_interval(gen) < p_cond) ++cond;
            double x = detail::unit_interval(gen);
            auto k = static_cast<unsigned>(std::lower_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
            k = std::min(k, law_terms - 1);
            if (detail::unit_interval(gen) < keep[k]) ++comp;
        }
    });
    SplittingReport r;
    r.m = m;
    r.samples = samples;
    r.seed = seed;
    for (auto [c, d] : per_block) {
        r.conditional_hits += c;
        r.composite_hits += d;
    }
    r.conditional_frequency = static_cast<double>(r.conditional_hits) / static_cast<double>(samples);
    r.composite_frequency = static_cast<double>(r.composite_hits) / static_cast<double>(samples);
    r.conditional_probability = pow3_inv(m);
    r.composite_mass = mass;
    return r;
}

} // namespace zeta3pell
