#pragma once

// The cubic residue symbol (v/w)_3 over Z[zeta3].
//
// euler_symbol evaluates v^((N(pi)-1)/3) mod pi and identifies the power of
// zeta it equals. general_symbol extends multiplicatively over the
// factorization of w. fast_symbol gives the same answer without factoring,
// by a Euclidean descent driven by cubic reciprocity.

#include <ostream>
#include <stdexcept>
#include <string>

#include "eisenstein.hpp"
#include "factorization.hpp"

namespace zeta3pell {

/// Either "not coprime" (symbol value 0) or zeta^log with log in {0,1,2}.
class CubicSymbol {
public:
    static CubicSymbol not_coprime() { return CubicSymbol(-1); }
    static CubicSymbol from_log(int j) { return CubicSymbol(((j % 3) + 3) % 3); }

    bool is_coprime() const { return log_ >= 0; }
    /// Exponent of zeta in F_3; precondition is_coprime().
    int log() const {
        if (log_ < 0) throw std::logic_error("CubicSymbol::log on a not-coprime symbol");
        return log_;
    }

    friend CubicSymbol operator*(CubicSymbol x, CubicSymbol y) {
        if (!x.is_coprime() || !y.is_coprime()) return not_coprime();
        return from_log(x.log_ + y.log_);
    }
    CubicSymbol pow(int e) const { return is_coprime() ? from_log(log_ * (e % 3)) : *this; }

    friend bool operator==(CubicSymbol, CubicSymbol) = default;

    /// "0", "1", "zeta3" or "zeta3^2".
    std::string value_str() const {
        switch (log_) {
        case 0: return "1";
        case 1: return "zeta3";
        case 2: return "zeta3^2";
        default: return "0";
        }
    }

    friend std::ostream& operator<<(std::ostream& os, CubicSymbol s) { return os << s.value_str(); }

private:
    explicit CubicSymbol(int v) : log_(v) {}
    int log_;
};

namespace detail {

template <Integer I>
EisensteinInt<I> powmod(EisensteinInt<I> base, I e, const EisensteinInt<I>& m) {
    EisensteinInt<I> result = mod(EisensteinInt<I>::one(), m);
    base = mod(base, m);
    while (e > 0) {
        if (e % 2 == 1) result = mod(result * base, m);
        e /= 2;
        if (e > 0) base = mod(base * base, m);
    }
    return result;
}

} // namespace detail

/// (v/pi)_3 by the Euler criterion. pi must be irreducible and not associate
/// to lambda.
template <Integer I>
CubicSymbol euler_symbol(const EisensteinInt<I>& v, const EisensteinInt<I>& pi) {
    if (divides(EisensteinInt<I>::lambda(), pi))
        throw std::domain_error("euler_symbol: denominator divisible by lambda");
    if (!is_irreducible(pi)) throw std::domain_error("euler_symbol: denominator is not irreducible");
    EisensteinInt<I> r = mod(v, pi);
    if (r.is_zero()) return CubicSymbol::not_coprime();
    I e = (pi.norm() - 1) / 3;
    EisensteinInt<I> t = detail::powmod(r, e, pi);
    int found = -1;
    EisensteinInt<I> zeta_j = EisensteinInt<I>::one();
    for (int j = 0; j < 3; ++j) {
        if (congruent(t, zeta_j, pi)) {
            if (found >= 0) throw std::logic_error("euler_symbol: residue matches two powers of zeta");
            found = j;
        }
        zeta_j *= EisensteinInt<I>::zeta();
    }
    if (found < 0) throw std::logic_error("euler_symbol: residue is not a power of zeta");
    return CubicSymbol::from_log(found);
}

/// (v/w)_3 as the product over the factorization of w (w coprime to 3).
template <Integer I>
CubicSymbol general_symbol(const EisensteinInt<I>& v, const EisensteinInt<I>& w) {
    if (divides(EisensteinInt<I>::lambda(), w))
        throw std::domain_error("general_symbol: denominator divisible by lambda");
    CubicSymbol s = CubicSymbol::from_log(0);
    for (const auto& f : factor(w).factors) s = s * euler_symbol(v, f.prime).pow(f.exponent);
    return s;
}

namespace detail {

// For primary w (w = 1 mod 3) write w = 1 + 3(m + n*zeta).
template <Integer I>
int log_zeta_over_primary(const EisensteinInt<I>& w) {
    // (zeta/w) = zeta^((N(w)-1)/3), additive in w.
    I e = (w.norm() - 1) / 3;
    return static_cast<int>(detail::narrow<std::int64_t>(detail::mod(e, I(3))));
}

template <Integer I>
int log_lambda_over_primary(const EisensteinInt<I>& w) {
    // Supplementary law for lambda = 1 - zeta: (lambda/w) = zeta^m where
    // w = 1 + 3(m + n*zeta) is primary. Additive in w since
    // (1 + 3x)(1 + 3y) = 1 + 3(x + y) mod 9.
    I m = (w.a() - 1) / 3;
    return static_cast<int>(detail::narrow<std::int64_t>(detail::mod(m, I(3))));
}

} // namespace detail

/// (v/w)_3 without factoring w: reduce, strip units and lambda-powers from the
/// numerator with the supplementary laws, then swap by cubic reciprocity.
template <Integer I>
CubicSymbol fast_symbol(const EisensteinInt<I>& v_in, const EisensteinInt<I>& w_in) {
    const auto lam = EisensteinInt<I>::lambda();
    if (divides(lam, w_in)) throw std::domain_error("fast_symbol: denominator divisible by lambda");
    EisensteinInt<I> w = primary2_assoc(w_in);
    EisensteinInt<I> v = mod(v_in, w);
    int acc = 0;
    for (;;) {
        if (w.norm() == 1) return CubicSymbol::from_log(acc);
        if (v.is_zero()) return CubicSymbol::not_coprime();
        int k = 0;
        while (divides(lam, v)) {
            v = exact_div(v, lam);
            ++k;
        }
        EisensteinInt<I> vp = primary2_assoc(v);
        Unit u = *Unit::from_element(exact_div(v, vp));
        acc += k * detail::log_lambda_over_primary(w) + u.zeta_exponent() * detail::log_zeta_over_primary(w);
        // (vp/w) = (w/vp) for coprime primary vp, w
        v = mod(w, vp);
        w = vp;
    }
}

} // namespace zeta3pell
