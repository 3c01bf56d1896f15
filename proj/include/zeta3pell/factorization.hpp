#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "eisenstein.hpp"
#include "integer.hpp"

namespace zeta3pell {

template <Integer I>
struct PrimePower {
    EisensteinInt<I> prime;
    int exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// x = unit * prod prime^exponent. Primes are canonical (lambda itself, or the
/// primary2 associate) and sorted by (norm, a, b).
template <Integer I>
struct Factorization {
    Unit unit;
    std::vector<PrimePower<I>> factors;

    EisensteinInt<I> product() const {
        EisensteinInt<I> x = unit.value<I>();
        for (const auto& f : factors) x *= f.prime.pow(static_cast<unsigned>(f.exponent));
        return x;
    }
};

namespace detail {

template <Integer I>
std::uint64_t norm_u64(const EisensteinInt<I>& x) {
    I n = x.norm();
    if constexpr (std::is_same_v<I, BigInt>) {
        if (n > BigInt(std::numeric_limits<std::uint64_t>::max()))
            throw std::domain_error("norm exceeds 64 bits; factorization unsupported");
        return n.template convert_to<std::uint64_t>();
    } else {
        return static_cast<std::uint64_t>(n);
    }
}

} // namespace detail

/// A prime of Z[zeta3] above the rational prime p = 1 mod 3, from a square root
/// of -3 mod p: zeta = (s - 1)/2 mod p, then gcd(p, zeta - r).
template <Integer I>
EisensteinInt<I> split_prime_over(std::uint64_t p) {
    if (p % 3 != 1 || !is_prime_u64(p)) throw std::domain_error("split_prime_over: p must be a prime = 1 mod 3");
    if constexpr (std::is_same_v<I, std::int64_t>) return split_prime_over<__int128>(p).template cast<I>();
    std::uint64_t s = sqrt_mod(p - 3, p);
    std::uint64_t inv2 = (p + 1) / 2;
    std::uint64_t r = mulmod((s + p - 1) % p, inv2, p);
    EisensteinInt<I> g = gcd(EisensteinInt<I>(detail::narrow<I>(static_cast<std::int64_t>(p))),
                             EisensteinInt<I>(detail::narrow<I>(-static_cast<std::int64_t>(r)), I(1)));
    if (detail::norm_u64(g) != p) throw std::logic_error("split_prime_over: gcd did not isolate a prime");
    return g;
}

template <Integer I>
Factorization<I> factor(const EisensteinInt<I>& x) {
    if (x.is_zero()) throw std::domain_error("factor: zero has no factorization");
    if constexpr (std::is_same_v<I, std::int64_t>) {
        // intermediate products of 64-bit inputs need 128 bits
        Factorization<__int128> wide = factor(x.template cast<__int128>());
        Factorization<I> out;
        out.unit = wide.unit;
        for (const auto& pp : wide.factors) out.factors.push_back({pp.prime.template cast<I>(), pp.exponent});
        return out;
    }
    Factorization<I> out;
    EisensteinInt<I> rest = x;
    auto strip = [&](const EisensteinInt<I>& prime) {
        int e = 0;
        while (divides(prime, rest)) {
            rest = exact_div(rest, prime);
            ++e;
        }
        if (e > 0) out.factors.push_back({prime, e});
    };
    for (auto [p, e] : factor_u64(detail::norm_u64(x))) {
        if (p == 3) {
            strip(EisensteinInt<I>::lambda());
        } else if (p % 3 == 2) {
            strip(EisensteinInt<I>(detail::narrow<I>(-static_cast<std::int64_t>(p))));
        } else {
            EisensteinInt<I> pi = primary2_assoc(split_prime_over<I>(p));
            strip(pi);
            strip(primary2_assoc(pi.conj()));
        }
    }
    auto unit = Unit::from_element(rest);
    if (!unit) throw std::logic_error("factor: cofactor is not a unit");
    out.unit = *unit;
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& l, const auto& r) { return norm_less(l.prime, r.prime); });
    return out;
}

/// True iff x is irreducible in Z[zeta3].
template <Integer I>
bool is_irreducible(const EisensteinInt<I>& x) {
    if (x.is_zero()) return false;
    std::uint64_t n = detail::norm_u64(x);
    if (is_prime_u64(n)) return true;
    auto f = factor_u64(n);
    if (f.size() == 1 && f[0].second == 2 && f[0].first % 3 == 2) return true;
    return false;
}

/// Local admissibility of a prime divisor of alpha: norm = 1 mod 9. Split primes
/// qualify when p = 1 mod 9; inert q qualify when q^2 = 1 mod 9.
template <Integer I>
bool is_admissible(const EisensteinInt<I>& pi) {
    if (!is_irreducible(pi)) throw std::domain_error("is_admissible: argument is not irreducible");
    if (are_associates(pi, EisensteinInt<I>::lambda()))
        throw std::domain_error("is_admissible: argument is associate to lambda");
    return detail::norm_u64(pi) % 9 == 1;
}

} // namespace zeta3pell
