#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>

#include "support/oracles.hpp"
#include "zeta3pell/f3.hpp"

using namespace zeta3pell;

namespace {

// Rank of a square matrix over F_3 for n <= 3 from its minors.
std::size_t rank_by_minors(const F3Matrix& m) {
    const std::size_t n = m.rows();
    auto det2 = [&](std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
        return (int(m(r0, c0)) * m(r1, c1) - int(m(r0, c1)) * m(r1, c0)) % 3;
    };
    if (n == 3) {
        int d = 0;
        for (std::size_t j = 0; j < 3; ++j) {
            std::size_t a = (j + 1) % 3, b = (j + 2) % 3;
            d += int(m(0, j)) * det2(1, 2, std::min(a, b), std::max(a, b)) * ((j % 2) ? -1 : 1);
        }
        if (d % 3 != 0) return 3;
    }
    if (n >= 2) {
        for (std::size_t r0 = 0; r0 < n; ++r0)
            for (std::size_t r1 = r0 + 1; r1 < n; ++r1)
                for (std::size_t c0 = 0; c0 < n; ++c0)
                    for (std::size_t c1 = c0 + 1; c1 < n; ++c1)
                        if (det2(r0, r1, c0, c1) != 0) return 2;
    }
    for (auto x : m.entries())
        if (x) return 1;
    return 0;
}

} // namespace

TEST(F3, Arithmetic) {
    EXPECT_EQ(f3(-1), 2);
    EXPECT_EQ(f3(7), 1);
    EXPECT_EQ(f3_add(2, 2), 1);
    EXPECT_EQ(f3_mul(2, 2), 1);
    EXPECT_EQ(f3_neg(1), 2);
    EXPECT_EQ(f3_inv(2), 2);
    EXPECT_THROW(f3_inv(0), std::domain_error);
}

TEST(F3, RankExamples) {
    EXPECT_EQ(rank(F3Matrix{{0}}), 0u);
    EXPECT_EQ(rank(F3Matrix::identity(5)), 5u);
    EXPECT_EQ(rank(F3Matrix{{1, 2}, {2, 1}}), 1u);
    EXPECT_EQ(rank(F3Matrix{{1, 1}, {1, 2}}), 2u);
    EXPECT_EQ(rank(F3Matrix{{1, 2, 0}, {2, 1, 0}, {0, 0, 0}}), 1u);
    EXPECT_EQ(rank(F3Matrix{{1, 1, 1}, {1, 2, 0}}), 2u);
}

TEST(F3, KernelExamples) {
    F3Matrix m{{1, 2}, {2, 1}};
    auto k = kernel_basis(m);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (F3Vector{1, 1}));
    EXPECT_EQ(kernel_basis(F3Matrix::identity(3)).size(), 0u);
    EXPECT_EQ(kernel_basis(F3Matrix(2, 4)).size(), 4u);
}

TEST(F3, MatrixVector) {
    F3Matrix m{{1, 2, 0}, {0, 1, 1}};
    EXPECT_EQ(m * F3Vector({1, 1, 1}), (F3Vector{0, 2}));
    EXPECT_EQ(m.left_multiply(F3Vector({1, 1})), (F3Vector{1, 0, 1}));
    EXPECT_THROW(m * F3Vector({1, 1}), std::invalid_argument);
    EXPECT_THROW(m.set(2, 0, 1), std::out_of_range);
    EXPECT_THROW((F3Matrix{{1, 2}, {1}}), std::invalid_argument);
}

TEST(F3, RankNullityAndKernelRandom) {
    std::mt19937_64 gen(3);
    std::uniform_int_distribution<int> dim(1, 9), ent(0, 2);
    for (int t = 0; t < 2000; ++t) {
        std::size_t r = dim(gen), c = dim(gen);
        F3Matrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, ent(gen));
        auto k = kernel_basis(m);
        std::size_t rk = rank(m);
        ASSERT_EQ(k.size() + rk, c);
        ASSERT_EQ(rank(m.transpose()), rk);
        for (const auto& v : k) ASSERT_TRUE((m * v).is_zero());
        if (!k.empty()) {
            F3Matrix kb(k.size(), c);
            for (std::size_t i = 0; i < k.size(); ++i)
                for (std::size_t j = 0; j < c; ++j) kb.set(i, j, k[i][j]);
            ASSERT_EQ(rank(kb), k.size());
        }
    }
}

TEST(F3, RankInvariantUnderPermutation) {
    std::mt19937_64 gen(4);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 6;
        F3Matrix m = random_symmetric(n, gen);
        std::vector<std::size_t> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), gen);
        F3Matrix q(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) q.set(i, j, m(p[i], p[j]));
        ASSERT_EQ(rank(q), rank(m));
    }
}

TEST(F3, RankMatchesMinorsOracle) {
    std::mt19937_64 gen(12);
    for (std::size_t n = 1; n <= 3; ++n)
        for (int t = 0; t < 3000; ++t) {
            F3Matrix m = random_symmetric(n, gen);
            ASSERT_EQ(rank(m), rank_by_minors(m)) << m.str();
        }
}

TEST(F3, ExactCorankTwoByTwo) {
    auto d = exact_corank_distribution(2);
    auto o = oracle::corank_counts_2x2();
    EXPECT_EQ(o, (std::vector<int>{18, 8, 1}));
    ASSERT_EQ(d.size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(d.at(k), BigRational(o[k], 27));
}

TEST(F3, ExactCorankSmall) {
    auto d1 = exact_corank_distribution(1);
    EXPECT_EQ(d1.at(0), BigRational(2, 3));
    EXPECT_EQ(d1.at(1), BigRational(1, 3));
    for (std::size_t n = 1; n <= 4; ++n) {
        BigRational s(0);
        for (auto& [k, p] : exact_corank_distribution(n)) s += p;
        EXPECT_EQ(s, BigRational(1));
    }
    std::map<std::size_t, int> brute;
    for (int code = 0; code < 729; ++code) {
        F3Matrix m(3, 3);
        int c = code;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = i; j < 3; ++j) {
                m.set(i, j, c % 3);
                m.set(j, i, c % 3);
                c /= 3;
            }
        ++brute[3 - rank_by_minors(m)];
    }
    auto d3 = exact_corank_distribution(3);
    for (auto [k, c] : brute) EXPECT_EQ(d3.at(k), BigRational(c, 729));
    EXPECT_THROW(exact_corank_distribution(5), std::domain_error);
}

TEST(F3, RandomSymmetricIsDeterministicAndSymmetric) {
    std::mt19937_64 g1(99), g2(99);
    for (int t = 0; t < 100; ++t) {
        F3Matrix a = random_symmetric(7, g1), b = random_symmetric(7, g2);
        ASSERT_EQ(a, b);
        ASSERT_TRUE(a.is_symmetric());
    }
    EXPECT_THROW(random_symmetric(0, g1), std::invalid_argument);
}

TEST(F3, TritSourceIsUniform) {
    std::mt19937_64 gen(1);
    TritSource trits(gen);
    std::array<int, 3> counts{};
    for (int i = 0; i < 300000; ++i) ++counts[trits.next()];
    for (int c : counts) EXPECT_NEAR(c / 300000.0, 1.0 / 3.0, 0.005);
}
