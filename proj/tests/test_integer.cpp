#include <gtest/gtest.h>

#include <random>

#include "zeta3pell/integer.hpp"

using namespace zeta3pell;

TEST(Integer, RoundDivTiesTowardZero) {
    EXPECT_EQ(detail::round_div<std::int64_t>(5, 2), 2);
    EXPECT_EQ(detail::round_div<std::int64_t>(-5, 2), -2);
    EXPECT_EQ(detail::round_div<std::int64_t>(7, 2), 3);
    EXPECT_EQ(detail::round_div<std::int64_t>(-7, 2), -3);
    EXPECT_EQ(detail::round_div<std::int64_t>(8, 3), 3);
    EXPECT_EQ(detail::round_div<std::int64_t>(-8, 3), -3);
    EXPECT_EQ(detail::round_div<std::int64_t>(1, 3), 0);
}

TEST(Integer, CheckedArithmeticThrowsOnOverflow) {
    const auto big = std::numeric_limits<std::int64_t>::max();
    EXPECT_THROW(detail::add<std::int64_t>(big, 1), std::overflow_error);
    EXPECT_THROW(detail::mul<std::int64_t>(big, 2), std::overflow_error);
    EXPECT_THROW(detail::sub<std::int64_t>(std::numeric_limits<std::int64_t>::min(), 1), std::overflow_error);
    EXPECT_EQ(detail::add<BigInt>(BigInt(big), BigInt(1)), BigInt(big) + 1);
}

TEST(Integer, NarrowRoundTrips) {
    EXPECT_EQ((detail::narrow<__int128, std::int64_t>(-42)), (__int128)-42);
    EXPECT_EQ((detail::narrow<std::int64_t, BigInt>(BigInt(-123456789))), -123456789);
    EXPECT_THROW((detail::narrow<std::int32_t, std::int64_t>(std::int64_t(1) << 40)), std::overflow_error);
    BigInt huge = BigInt(1) << 100;
    EXPECT_EQ(detail::to_string(detail::narrow<__int128, BigInt>(huge)), huge.str());
    EXPECT_EQ(detail::to_string(detail::narrow<__int128, BigInt>(BigInt(-huge))), BigInt(-huge).str());
}

TEST(Integer, Int128ToString) {
    EXPECT_EQ(detail::to_string<__int128>(0), "0");
    EXPECT_EQ(detail::to_string<__int128>(-17), "-17");
    __int128 m = std::numeric_limits<__int128>::min();
    EXPECT_EQ(detail::to_string(m), "-170141183460469231731687303715884105728");
}

TEST(Integer, MillerRabinMatchesSieve) {
    auto primes = primes_up_to(100000);
    std::vector<bool> is_p(100001, false);
    for (auto p : primes) is_p[p] = true;
    for (std::uint64_t n = 0; n <= 100000; ++n) ASSERT_EQ(is_prime_u64(n), is_p[n]) << n;
    EXPECT_TRUE(is_prime_u64(18446744073709551557ull));
    EXPECT_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Integer, FactorReconstructs) {
    std::mt19937_64 gen(7);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t n = gen() % 1000000000000ull + 1;
        std::uint64_t prod = 1;
        for (auto [p, e] : factor_u64(n)) {
            EXPECT_TRUE(is_prime_u64(p));
            for (int k = 0; k < e; ++k) prod *= p;
        }
        EXPECT_EQ(prod, n);
    }
    // product of two primes above the trial-division limit
    auto f = factor_u64(1000003ull * 1000033ull);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0].first, 1000003ull);
    EXPECT_EQ(f[1].first, 1000033ull);
    EXPECT_THROW(factor_u64(0), std::domain_error);
}

TEST(Integer, SqrtMod) {
    for (std::uint64_t p : primes_up_to(2000)) {
        if (p == 2) continue;
        for (std::uint64_t a = 1; a < std::min<std::uint64_t>(p, 50); ++a) {
            if (powmod(a, (p - 1) / 2, p) != 1) {
                EXPECT_THROW(sqrt_mod(a, p), std::domain_error);
                continue;
            }
            std::uint64_t r = sqrt_mod(a, p);
            EXPECT_EQ(mulmod(r, r, p), a % p);
        }
    }
}
