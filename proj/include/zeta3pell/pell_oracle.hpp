#pragma once

// Brute-force witnesses for N_{L/K}(x) = zeta3 in the order O_K[t], t^3 = alpha.
//
// Only the monogenic order is searched. It can be strictly smaller than the
// maximal order of L (at lambda it always is for tame alpha), so an exhausted
// search says nothing about solvability; a found witness is a proof.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

#include "eisenstein.hpp"

namespace zeta3pell {

/// u + v t + w t^2 with t^3 = alpha.
template <Integer I>
struct CubicElt {
    EisensteinInt<I> u;
    EisensteinInt<I> v;
    EisensteinInt<I> w;

    friend bool operator==(const CubicElt&, const CubicElt&) = default;

    template <Integer J>
    CubicElt<J> cast() const {
        return {u.template cast<J>(), v.template cast<J>(), w.template cast<J>()};
    }
};

/// Product in O_K[t] with t^3 reduced to alpha.
template <Integer I>
CubicElt<I> multiply(const CubicElt<I>& x, const CubicElt<I>& y, const EisensteinInt<I>& alpha) {
    // degrees 0..4 then fold t^3 -> alpha, t^4 -> alpha t
    EisensteinInt<I> c0 = x.u * y.u;
    EisensteinInt<I> c1 = x.u * y.v + x.v * y.u;
    EisensteinInt<I> c2 = x.u * y.w + x.v * y.v + x.w * y.u;
    EisensteinInt<I> c3 = x.v * y.w + x.w * y.v;
    EisensteinInt<I> c4 = x.w * y.w;
    return {c0 + alpha * c3, c1 + alpha * c4, c2};
}

/// Closed-form relative norm u^3 + alpha v^3 + alpha^2 w^3 - 3 alpha u v w.
template <Integer I>
EisensteinInt<I> relative_norm(const CubicElt<I>& x, const EisensteinInt<I>& alpha) {
    const EisensteinInt<I> three(I(3));
    return x.u * x.u * x.u + alpha * x.v * x.v * x.v + alpha * alpha * x.w * x.w * x.w -
           three * alpha * x.u * x.v * x.w;
}

/// The norm as the literal product of the three conjugates
/// (u + z^k v t + z^2k w t^2), k = 0,1,2, multiplied out in O_K[t].
template <Integer I>
EisensteinInt<I> conjugate_product_norm(const CubicElt<I>& x, const EisensteinInt<I>& alpha) {
    const auto z = EisensteinInt<I>::zeta();
    const auto z2 = z * z;
    CubicElt<I> c1{x.u, z * x.v, z2 * x.w};
    CubicElt<I> c2{x.u, z2 * x.v, z * x.w};
    CubicElt<I> p = multiply(multiply(x, c1, alpha), c2, alpha);
    if (!p.v.is_zero() || !p.w.is_zero())
        throw std::logic_error("conjugate_product_norm: product of conjugates is not in O_K");
    return p.u;
}

/// Norm exactly zeta3, confirmed by both norm evaluations.
template <Integer I>
bool verify_witness(const CubicElt<I>& x, const EisensteinInt<I>& alpha) {
    const auto z = EisensteinInt<I>::zeta();
    return relative_norm(x, alpha) == z && conjugate_product_norm(x, alpha) == z;
}

using Witness = CubicElt<std::int64_t>;

struct SearchOutcome {
    std::int64_t bound = 0;
    /// Element with norm zeta3 when the search succeeded.
    std::optional<Witness> witness;
    /// The element the scan hit; witness is its square when it had norm zeta3^2.
    std::optional<Witness> scanned;
    int scanned_norm_log = 0;  // 1: zeta3, 2: zeta3^2

    bool found() const { return witness.has_value(); }
};

namespace detail {

inline std::int64_t l1(const Eisenstein& x) { return std::abs(x.a()) + std::abs(x.b()); }

/// Scan order: (|u|_1, |v|_1, |w|_1) then coordinates lexicographically.
inline auto scan_key(const Witness& x) {
    return std::make_tuple(l1(x.u), l1(x.v), l1(x.w), x.u.a(), x.u.b(), x.v.a(), x.v.b(), x.w.a(), x.w.b());
}

using cld = std::complex<long double>;

inline cld to_complex(const EisensteinInt<__int128>& x) {
    const long double h = std::sqrt(3.0L) / 2.0L;
    long double a = static_cast<long double>(x.a()), b = static_cast<long double>(x.b());
    return {a - b / 2.0L, b * h};
}

// Roots of u^3 + p u + q.
inline std::array<cld, 3> depressed_cubic_roots(cld p, cld q) {
    const cld omega(-0.5L, std::sqrt(3.0L) / 2.0L);
    cld disc = std::sqrt(q * q / 4.0L + p * p * p / 27.0L);
    cld s1 = -q / 2.0L + disc, s2 = -q / 2.0L - disc;
    cld s = std::abs(s1) >= std::abs(s2) ? s1 : s2;
    std::array<cld, 3> roots;
    cld c = std::pow(s, 1.0L / 3.0L);
    for (int k = 0; k < 3; ++k) {
        cld ck = c;
        for (int i = 0; i < k; ++i) ck *= omega;
        cld r = std::abs(ck) == 0.0L ? cld(0) : ck - p / (3.0L * ck);
        for (int it = 0; it < 4; ++it) {
            cld f = r * r * r + p * r + q;
            cld df = 3.0L * r * r + p;
            if (std::abs(df) == 0.0L) break;
            r -= f / df;
        }
        roots[k] = r;
    }
    return roots;
}

} // namespace detail

namespace detail {

// Scans (v, w) over the box and recovers u from the cubic
// u^3 - 3 C v w u + (A v^3 + B w^3 - target) = 0, which is the norm form
// u^3 + A v^3 + B w^3 - 3 C u v w = target. Every hit in the box is passed
// to accept(u, v, w, target_index); the caller keeps the minimum.
template <class Accept>
void scan_norm_form(const EisensteinInt<__int128>& A, const EisensteinInt<__int128>& B,
                    const EisensteinInt<__int128>& C, const std::vector<EisensteinInt<__int128>>& targets,
                    std::int64_t bound, unsigned workers, Accept&& accept) {
    using E128 = EisensteinInt<__int128>;
    const long double h = std::sqrt(3.0L) / 2.0L;
    const E128 three(3);

    auto scan_v = [&](std::int64_t va) {
        for (std::int64_t vb = -bound; vb <= bound; ++vb) {
            E128 v{__int128(va), __int128(vb)};
            E128 v3 = A * v * v * v;
            for (std::int64_t wa = -bound; wa <= bound; ++wa) {
                for (std::int64_t wb = -bound; wb <= bound; ++wb) {
                    E128 w{__int128(wa), __int128(wb)};
                    E128 p = -(three * C * v * w);
                    E128 q0 = v3 + B * w * w * w;
                    const cld pc = to_complex(p);
                    for (std::size_t t = 0; t < targets.size(); ++t) {
                        const E128 q = q0 - targets[t];
                        auto roots = depressed_cubic_roots(pc, to_complex(q));
                        std::array<std::pair<std::int64_t, std::int64_t>, 27> seen{};
                        std::size_t nseen = 0;
                        for (const auto& r : roots) {
                            long double bf = r.imag() / h;
                            long double af = r.real() + bf / 2.0L;
                            if (!(std::abs(af) < 1e15L && std::abs(bf) < 1e15L)) continue;
                            auto a0 = static_cast<std::int64_t>(std::llround(af));
                            auto b0 = static_cast<std::int64_t>(std::llround(bf));
                            for (std::int64_t da = -1; da <= 1; ++da) {
                                for (std::int64_t db = -1; db <= 1; ++db) {
                                    std::int64_t ua = a0 + da, ub = b0 + db;
                                    if (std::abs(ua) > bound || std::abs(ub) > bound) continue;
                                    std::pair<std::int64_t, std::int64_t> key{ua, ub};
                                    if (std::find(seen.begin(), seen.begin() + nseen, key) != seen.begin() + nseen)
                                        continue;
                                    seen[nseen++] = key;
                                    E128 u{__int128(ua), __int128(ub)};
                                    if (u * u * u + q0 - three * C * u * v * w == targets[t])
                                        accept(Witness{{ua, ub}, {va, vb}, {wa, wb}}, t);
                                }
                            }
                        }
                    }
                }
            }
        }
    };

    workers = std::max(1u, workers);
    if (workers == 1) {
        for (std::int64_t va = -bound; va <= bound; ++va) scan_v(va);
        return;
    }
    std::atomic<std::int64_t> next{-bound};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (std::int64_t va; (va = next.fetch_add(1)) <= bound;) scan_v(va);
        });
    for (auto& th : pool) th.join();
}

} // namespace detail

/// Searches the box with every coordinate of u, v, w in [-bound, bound] for an
/// element of O_K[t] of norm zeta3 or zeta3^2, returning the first in scan order
/// (|u|_1, |v|_1, |w|_1, then coordinates). For each (v, w) the norm equation
/// is a cubic in u, so u is recovered from its complex roots and checked
/// exactly; this visits the same witnesses as a full six-dimensional scan.
///
/// For alpha = 1 mod lambda^3 this never succeeds: every norm from O_K[t] is
/// congruent to a rational integer mod lambda^2 and zeta3 is not.
inline SearchOutcome search_norm_zeta3(const Eisenstein& alpha, std::int64_t bound, unsigned workers = 1) {
    if (bound < 1) throw std::domain_error("search_norm_zeta3: bound must be >= 1");
    if (alpha.is_zero()) throw std::domain_error("search_norm_zeta3: alpha must be nonzero");
    using E128 = EisensteinInt<__int128>;
    const E128 a = alpha.cast<__int128>();
    const std::vector<E128> targets{E128::zeta(), E128::zeta() * E128::zeta()};

    std::mutex mu;
    std::optional<Witness> best;
    int best_log = 0;
    detail::scan_norm_form(a, a * a, a, targets, bound, workers, [&](const Witness& x, std::size_t t) {
        std::lock_guard lock(mu);
        if (!best || detail::scan_key(x) < detail::scan_key(*best)) {
            best = x;
            best_log = static_cast<int>(t) + 1;
        }
    });

    SearchOutcome out;
    out.bound = bound;
    if (best) {
        out.scanned = best;
        out.scanned_norm_log = best_log;
        Witness wit = best_log == 1 ? *best : multiply(*best, *best, alpha);
        if (!verify_witness(wit.cast<__int128>(), a))
            throw std::logic_error("search_norm_zeta3: witness failed verification");
        out.witness = wit;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Search in the larger order spanned by (1, t, t^2/g) / lambda^k.

/// y = (u + v t + w t^2/g) / lambda^k where t^3 = alpha = f g^2. The search
/// hits k <= 2; squaring a norm-zeta3^2 hit can leave k up to 4.
struct UnitWitness {
    Witness coords;
    Eisenstein g{1};
    int lambda_power = 0;

    friend bool operator==(const UnitWitness&, const UnitWitness&) = default;
};

/// The element scaled into O_K[t]: g lambda^k y = g u + g v t + w t^2.
inline CubicElt<__int128> monogenic_multiple(const UnitWitness& y) {
    using E128 = EisensteinInt<__int128>;
    const E128 g = y.g.cast<__int128>();
    return {g * y.coords.u.cast<__int128>(), g * y.coords.v.cast<__int128>(), y.coords.w.cast<__int128>()};
}

/// y is an algebraic integer of norm exactly zeta3. Integrality is checked on
/// the characteristic polynomial over K: trace 3u / lambda^k, second
/// coefficient 3(u^2 - f g v w) / lambda^2k, and the norm itself.
inline bool verify_unit_witness(const UnitWitness& y, const Eisenstein& alpha) {
    using E128 = EisensteinInt<__int128>;
    const E128 a = alpha.cast<__int128>();
    const E128 g = y.g.cast<__int128>();
    if (g.is_zero() || !divides(g * g, a)) return false;
    if (y.lambda_power < 0 || y.lambda_power > 4) return false;
    const E128 f = exact_div(a, g * g);
    const E128 lk = E128::lambda().pow(static_cast<unsigned>(y.lambda_power));
    const E128 three(3);
    const E128 u = y.coords.u.cast<__int128>(), v = y.coords.v.cast<__int128>(), w = y.coords.w.cast<__int128>();
    if (!divides(lk, three * u)) return false;
    if (!divides(lk * lk, three * (u * u - f * g * v * w))) return false;
    // g^3 lambda^3k N(y) evaluated through both norm routes on the O_K[t] multiple
    const CubicElt<__int128> x = monogenic_multiple(y);
    const E128 expected = E128::zeta() * g * g * g * lk * lk * lk;
    return relative_norm(x, a) == expected && conjugate_product_norm(x, a) == expected;
}

struct UnitSearchOutcome {
    std::int64_t bound = 0;
    std::optional<UnitWitness> witness;  // norm zeta3
    std::optional<UnitWitness> scanned;  // as found; witness is its square when it had norm zeta3^2
    int scanned_norm_log = 0;

    bool found() const { return witness.has_value(); }
};

namespace detail {

inline Witness square_in_order(const Witness& x, const Eisenstein& f, const Eisenstein& g) {
    // basis 1, s1 = t, s2 = t^2/g with s1^2 = g s2, s2^2 = f s1, s1 s2 = f g
    const Eisenstein fg = f * g;
    Eisenstein c0 = x.u * x.u + Eisenstein(2) * fg * x.v * x.w;
    Eisenstein c1 = Eisenstein(2) * x.u * x.v + f * x.w * x.w;
    Eisenstein c2 = Eisenstein(2) * x.u * x.w + g * x.v * x.v;
    return {c0, c1, c2};
}

} // namespace detail

/// Searches y = (u + v t + w t^2/g) / lambda^k for k = 0, 1, 2 and all
/// coordinates in [-bound, bound], alpha = f g^2, for an algebraic integer of
/// norm zeta3 or zeta3^2 (such a y is a unit). Scan order is (k, |u|_1, |v|_1,
/// |w|_1, coordinates); the first hit wins regardless of worker count.
inline UnitSearchOutcome search_unit_norm_zeta3(const Eisenstein& f, const Eisenstein& g, std::int64_t bound,
                                                unsigned workers = 1) {
    if (bound < 1) throw std::domain_error("search_unit_norm_zeta3: bound must be >= 1");
    if (f.is_zero() || g.is_zero()) throw std::domain_error("search_unit_norm_zeta3: f and g must be nonzero");
    using E128 = EisensteinInt<__int128>;
    const E128 f128 = f.cast<__int128>(), g128 = g.cast<__int128>();
    const E128 A = f128 * g128 * g128, B = f128 * f128 * g128, C = f128 * g128;
    const Eisenstein alpha = f * g * g;
    const E128 three(3);

    UnitSearchOutcome out;
    out.bound = bound;
    for (int k = 0; k <= 2 && !out.found(); ++k) {
        const E128 lk = E128::lambda().pow(static_cast<unsigned>(k));
        const E128 l3k = lk * lk * lk;
        const std::vector<E128> targets{E128::zeta() * l3k, E128::zeta() * E128::zeta() * l3k};
        std::mutex mu;
        std::optional<Witness> best;
        int best_log = 0;
        detail::scan_norm_form(A, B, C, targets, bound, workers, [&](const Witness& x, std::size_t t) {
            const E128 u = x.u.cast<__int128>(), v = x.v.cast<__int128>(), w = x.w.cast<__int128>();
            if (!divides(lk * lk, three * (u * u - C * v * w))) return;
            std::lock_guard lock(mu);
            if (!best || detail::scan_key(x) < detail::scan_key(*best)) {
                best = x;
                best_log = static_cast<int>(t) + 1;
            }
        });
        if (!best) continue;
        UnitWitness scanned{*best, g, k};
        UnitWitness wit = scanned;
        if (best_log == 2) {
            // y^2 = (x^2 in the order) / lambda^2k, then cancel common lambdas
            Witness sq = detail::square_in_order(*best, f, g);
            int kk = 2 * k;
            const Eisenstein lam = Eisenstein::lambda();
            while (kk > 0 && divides(lam, sq.u) && divides(lam, sq.v) && divides(lam, sq.w)) {
                sq = {exact_div(sq.u, lam), exact_div(sq.v, lam), exact_div(sq.w, lam)};
                --kk;
            }
            wit = {sq, g, kk};
        }
        if (!verify_unit_witness(wit, alpha))
            throw std::logic_error("search_unit_norm_zeta3: witness failed verification");
        out.scanned = scanned;
        out.scanned_norm_log = best_log;
        out.witness = wit;
    }
    return out;
}

} // namespace zeta3pell
