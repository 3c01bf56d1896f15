#pragma once

// Rational-integer helpers shared by the Eisenstein layer: overflow-checked
// arithmetic for builtin types, rounding division, and 64-bit factorization
// (trial division then Pollard rho).

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeta3pell {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

template <class I>
concept Integer = std::same_as<I, std::int32_t> || std::same_as<I, std::int64_t> ||
                  std::same_as<I, __int128> || std::same_as<I, BigInt>;

namespace detail {

template <Integer I>
I add(const I& x, const I& y) {
    if constexpr (std::is_same_v<I, BigInt>) {
        return x + y;
    } else {
        I r;
        if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in add");
        return r;
    }
}

template <Integer I>
I sub(const I& x, const I& y) {
    if constexpr (std::is_same_v<I, BigInt>) {
        return x - y;
    } else {
        I r;
        if (__builtin_sub_overflow(x, y, &r)) throw std::overflow_error("integer overflow in sub");
        return r;
    }
}

template <Integer I>
I mul(const I& x, const I& y) {
    if constexpr (std::is_same_v<I, BigInt>) {
        return x * y;
    } else {
        I r;
        if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in mul");
        return r;
    }
}

template <Integer I>
I abs(const I& x) {
    return x < 0 ? I(-x) : x;
}

template <Integer I>
int sign(const I& x) {
    return x < 0 ? -1 : (x > 0 ? 1 : 0);
}

/// Nearest integer to p/n for n > 0; exact halves round toward zero.
template <Integer I>
I round_div(const I& p, const I& n) {
    I q = p / n;
    I r = p % n;
    I twice = detail::mul(I(2), detail::abs(r));
    if (twice > n) q += sign(p);
    return q;
}

/// Least nonnegative residue.
template <Integer I>
I mod(const I& x, const I& m) {
    I r = x % m;
    if (r < 0) r += m;
    return r;
}

template <Integer I>
std::string to_string(const I& x) {
    if constexpr (std::is_same_v<I, BigInt>) {
        return x.str();
    } else if constexpr (std::is_same_v<I, __int128>) {
        if (x == 0) return "0";
        bool neg = x < 0;
        unsigned __int128 u = neg ? (unsigned __int128)(-(x + 1)) + 1 : (unsigned __int128)x;
        std::string s;
        while (u > 0) {
            s.push_back(char('0' + int(u % 10)));
            u /= 10;
        }
        if (neg) s.push_back('-');
        std::reverse(s.begin(), s.end());
        return s;
    } else {
        return std::to_string(x);
    }
}

/// Converts between integer backends, throwing when the value does not fit.
template <Integer To, Integer From>
To narrow(const From& x) {
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_same_v<To, BigInt>) {
        if constexpr (std::is_same_v<From, __int128>) return BigInt(to_string(x));
        else return BigInt(x);
    } else if constexpr (std::is_same_v<From, BigInt>) {
        if (x > BigInt(std::numeric_limits<To>::max()) || x < BigInt(std::numeric_limits<To>::min()))
            throw std::overflow_error("value does not fit target integer type");
        if constexpr (std::is_same_v<To, __int128>) {
            // cpp_int has no direct __int128 conversion on every boost version
            BigInt mag = x < 0 ? BigInt(-x) : x;
            unsigned __int128 u = 0;
            for (int shift = 0; mag != 0; shift += 32, mag >>= 32)
                u |= (unsigned __int128)static_cast<std::uint32_t>(mag & 0xffffffffu) << shift;
            return x < 0 ? -(__int128)u : (__int128)u;
        } else {
            return x.template convert_to<To>();
        }
    } else if constexpr (sizeof(To) >= sizeof(From)) {
        return static_cast<To>(x);
    } else {
        if (x > From(std::numeric_limits<To>::max()) || x < From(std::numeric_limits<To>::min()))
            throw std::overflow_error("value does not fit target integer type");
        return static_cast<To>(x);
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// 64-bit modular arithmetic and factorization

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((unsigned __int128)a * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

// Brent's variant; n must be composite and odd.
inline std::uint64_t pollard_rho(std::uint64_t n) {
    for (std::uint64_t c = 1;; ++c) {
        auto f = [&](std::uint64_t x) { return (mulmod(x, x, n) + c) % n; };
        std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
        std::uint64_t r = 1;
        constexpr std::uint64_t block = 128;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = f(y);
            std::uint64_t k = 0;
            do {
                ys = y;
                for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += block;
            } while (k < r && g == 1);
            r <<= 1;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace detail

/// Prime factorization of n >= 1 as sorted (prime, exponent) pairs.
inline std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factor_u64: zero has no factorization");
    std::vector<std::uint64_t> primes;
    constexpr std::uint64_t trial_limit = 1000000;
    for (std::uint64_t p = 2; p <= trial_limit && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    detail::factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t p : primes) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.emplace_back(p, 1);
    }
    return out;
}

/// Square root of a modulo an odd prime p (Tonelli-Shanks). Throws if a is a non-residue.
inline std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    if (powmod(a, (p - 1) / 2, p) != 1) throw std::domain_error("sqrt_mod: not a quadratic residue");
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    std::uint64_t m = s;
    std::uint64_t c = powmod(z, q, p);
    std::uint64_t t = powmod(a, q, p);
    std::uint64_t r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

/// Primes up to limit (inclusive) by a plain sieve.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

} // namespace zeta3pell
