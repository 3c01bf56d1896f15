#include <gtest/gtest.h>

#include "zeta3pell/heuristics.hpp"

using namespace zeta3pell;

namespace {

BigRational dec(const char* s) {
    // decimal string "0.xxx" to an exact rational
    std::string t(s);
    auto dot = t.find('.');
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    return BigRational(BigInt(digits), boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(t.size() - dot - 1)));
}

BigRational absr(const BigRational& x) { return x < 0 ? BigRational(-x) : x; }

} // namespace

TEST(Heuristics, ToDecimal) {
    EXPECT_EQ(to_decimal(BigRational(2, 3), 6), "0.666667");
    EXPECT_EQ(to_decimal(BigRational(1, 8), 2), "0.13");
    EXPECT_EQ(to_decimal(BigRational(-1, 3), 3), "-0.333");
    EXPECT_EQ(to_decimal(BigRational(5), 2), "5.00");
}

TEST(Heuristics, BetaSingleTerm) {
    EXPECT_EQ(beta_first_form(1).value, BigRational(2, 3));
    EXPECT_EQ(corank_denominator(0), BigInt(1));
    EXPECT_EQ(corank_denominator(2), BigInt(16));
    EXPECT_EQ(beta_m(BigRational(2, 3), 1), BigRational(1, 3));
}

TEST(Heuristics, BetaMatchesHighPrecisionReference) {
    const BigRational ref = dec("0.6390045766374777803896014202218");
    BetaValue b = beta(40);
    EXPECT_LT(absr(b.value - ref), BigRational(1, BigInt("1000000000000000000000000000000")));
    EXPECT_LE(b.lower, b.value);
    EXPECT_LE(b.value, b.upper);
    EXPECT_LT(b.upper - b.lower, BigRational(1, BigInt("100000000000000000000000000000000000")));
    EXPECT_LT(absr(beta_second_form(40).value - b.value), BigRational(1, BigInt("1000000000000")));
    EXPECT_EQ(to_decimal(b.value, 6), "0.639005");
}

TEST(Heuristics, CorankLawReferenceValues) {
    const BigRational b = beta(40).value;
    const BigRational eps(1, BigInt("100000000000000"));
    EXPECT_LT(absr(beta_m(b, 1) - dec("0.31950228831873889")), eps);
    EXPECT_LT(absr(beta_m(b, 2) - dec("0.03993778603984236")), eps);
    EXPECT_LT(absr(beta_m(b, 3) - dec("0.00153606869384009")), eps);
    EXPECT_LT(absr(beta_m(b, 4) - dec("0.0000192008586730011")), eps);
}

TEST(Heuristics, TruncationsConvergeMonotonically) {
    BigRational prev(1);
    for (unsigned t = 1; t <= 20; ++t) {
        BetaValue b = beta_first_form(t);
        EXPECT_LT(b.value, prev);
        EXPECT_LE(b.lower, b.value);
        EXPECT_LE(b.value, b.upper);
        prev = b.value;
    }
}

TEST(Heuristics, SeriesChecks) {
    ConstantsReport r = series_checks(40, 128, 40);
    for (const SeriesCheck* c : {&r.sum_beta_m, &r.upper_sum, &r.stevenhagen_sum}) {
        EXPECT_TRUE(c->holds()) << c->name;
        EXPECT_LT(c->deviation(), BigRational(1, 1000000000)) << c->name;
    }
    EXPECT_EQ(r.sum_beta_m.expected, BigRational(1));
    EXPECT_EQ(r.upper_sum.expected, BigRational(3, 4));
    EXPECT_EQ(r.conjecture_value, BigRational(2) - 2 * r.beta.value);
    EXPECT_EQ(to_decimal(r.conjecture_value, 6), "0.721991");
    EXPECT_TRUE(r.lower_identity);
    EXPECT_TRUE(r.upper_identity);
    EXPECT_EQ(r.lambda_upper, BigRational(95, 124));
    EXPECT_EQ(r.trivial_upper, BigRational(97, 124));
    EXPECT_EQ(r.lambda_lower, BigRational(91, 93) * r.beta.value);
    EXPECT_EQ(to_decimal(r.trivial_lower, 6), "0.556552");
    EXPECT_EQ(to_decimal(r.lambda_lower, 6), "0.625263");
}

TEST(Heuristics, LambdaRecomposition) {
    LambdaBounds lb = lambda_bound_checks(BigRational(2, 3));
    EXPECT_EQ(lb.lower, lb.lower_closed);
    EXPECT_EQ(lb.upper, lb.upper_closed);
    EXPECT_EQ(lb.lower_closed, BigRational(91, 93) * BigRational(2, 3));
    EXPECT_LT(lb.trivial_lower, lb.lower);
    EXPECT_LT(lb.upper, lb.trivial_upper);
}

TEST(Heuristics, CorankMonteCarloIsWorkerIndependent) {
    MCRankReport a = corank_mc(10, 20000, 7, 1);
    MCRankReport b = corank_mc(10, 20000, 7, 4);
    EXPECT_EQ(a.corank_counts, b.corank_counts);
    MCRankReport c = corank_mc(10, 20000, 8, 1);
    EXPECT_NE(a.corank_counts, c.corank_counts);
    std::uint64_t total = 0;
    for (auto [k, n] : a.corank_counts) total += n;
    EXPECT_EQ(total, 20000u);
    EXPECT_NEAR(a.frequency(0), 0.639, 0.02);
    ASSERT_EQ(a.comparison.size(), 5u);
    EXPECT_NEAR(a.comparison[1].predicted, 0.319502, 1e-6);
    EXPECT_THROW(corank_mc(0, 10, 1), std::domain_error);
    EXPECT_THROW(corank_mc(3, 0, 1), std::domain_error);
}

TEST(Heuristics, CorankMonteCarloSmallMatchesExactLaw) {
    MCRankReport r = corank_mc(2, 270000, 3, 2);
    EXPECT_NEAR(r.frequency(0), 18.0 / 27, 0.005);
    EXPECT_NEAR(r.frequency(1), 8.0 / 27, 0.005);
    EXPECT_NEAR(r.frequency(2), 1.0 / 27, 0.002);
}

TEST(Heuristics, SplittingModel) {
    SplittingReport a = splitting_mc(2, 100000, 5, 1);
    SplittingReport b = splitting_mc(2, 100000, 5, 3);
    EXPECT_EQ(a.conditional_hits, b.conditional_hits);
    EXPECT_EQ(a.composite_hits, b.composite_hits);
    EXPECT_EQ(a.conditional_probability, BigRational(1, 9));
    EXPECT_NEAR(a.conditional_frequency, 1.0 / 9, 0.005);
    EXPECT_NEAR(a.composite_frequency, to_double(a.composite_mass), 0.005);
    EXPECT_NEAR(to_double(a.composite_mass), 0.75, 1e-6);
}
