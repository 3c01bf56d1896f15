#pragma once

// Exact arithmetic in Z[zeta3]: the element a + b*zeta with zeta^2 = -1 - zeta.

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "integer.hpp"

namespace zeta3pell {

template <Integer I>
class EisensteinInt {
public:
    using int_type = I;

    constexpr EisensteinInt() = default;
    EisensteinInt(I a, I b = I(0)) : a_(std::move(a)), b_(std::move(b)) {}

    static EisensteinInt zero() { return {I(0), I(0)}; }
    static EisensteinInt one() { return {I(1), I(0)}; }
    static EisensteinInt zeta() { return {I(0), I(1)}; }
    /// The prime 1 - zeta above 3.
    static EisensteinInt lambda() { return {I(1), I(-1)}; }

    const I& a() const noexcept { return a_; }
    const I& b() const noexcept { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    /// a^2 - ab + b^2
    I norm() const {
        return detail::add(detail::sub(detail::mul(a_, a_), detail::mul(a_, b_)), detail::mul(b_, b_));
    }

    /// Complex conjugation: a + b*zeta -> (a - b) - b*zeta.
    EisensteinInt conj() const { return {detail::sub(a_, b_), I(-b_)}; }

    EisensteinInt operator-() const { return {I(-a_), I(-b_)}; }

    friend EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
        return {detail::add(x.a_, y.a_), detail::add(x.b_, y.b_)};
    }
    friend EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
        return {detail::sub(x.a_, y.a_), detail::sub(x.b_, y.b_)};
    }
    friend EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
        // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = -1 - z
        I ac = detail::mul(x.a_, y.a_);
        I bd = detail::mul(x.b_, y.b_);
        I cross = detail::add(detail::mul(x.a_, y.b_), detail::mul(x.b_, y.a_));
        return {detail::sub(ac, bd), detail::sub(cross, bd)};
    }
    EisensteinInt& operator+=(const EisensteinInt& y) { return *this = *this + y; }
    EisensteinInt& operator-=(const EisensteinInt& y) { return *this = *this - y; }
    EisensteinInt& operator*=(const EisensteinInt& y) { return *this = *this * y; }

    friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;

    EisensteinInt pow(unsigned long long e) const {
        EisensteinInt result = one();
        EisensteinInt base = *this;
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e > 0) base *= base;
        }
        return result;
    }

    /// Ordering by (norm, a, b); used wherever a canonical listing order is needed.
    friend bool norm_less(const EisensteinInt& x, const EisensteinInt& y) {
        auto nx = x.norm(), ny = y.norm();
        if (nx != ny) return nx < ny;
        if (x.a_ != y.a_) return x.a_ < y.a_;
        return x.b_ < y.b_;
    }

    std::string str() const { return "(" + detail::to_string(a_) + "," + detail::to_string(b_) + ")"; }

    friend std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) { return os << x.str(); }

    template <Integer J>
    EisensteinInt<J> cast() const {
        return {detail::narrow<J>(a_), detail::narrow<J>(b_)};
    }

private:
    I a_{0};
    I b_{0};
};

using Eisenstein = EisensteinInt<std::int64_t>;
using BigEisenstein = EisensteinInt<BigInt>;

/// Lexicographic (a, b) order; used for deterministic sorting of generators.
template <Integer I>
bool coeff_less(const EisensteinInt<I>& x, const EisensteinInt<I>& y) {
    return std::tie(x.a(), x.b()) < std::tie(y.a(), y.b());
}

// ---------------------------------------------------------------------------
// Units

/// The unit (-zeta^2)^k, k in 0..5: 1, -zeta^2, zeta, -1, zeta^2, -zeta.
struct Unit {
    int k = 0;

    constexpr Unit() = default;
    constexpr explicit Unit(int index) : k(((index % 6) + 6) % 6) {}

    template <Integer I>
    EisensteinInt<I> value() const {
        static constexpr std::array<std::pair<int, int>, 6> table{
            {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}};
        return {I(table[k].first), I(table[k].second)};
    }

    /// Exponent j with unit = +-zeta^j.
    constexpr int zeta_exponent() const {
        constexpr std::array<int, 6> table{0, 2, 1, 0, 2, 1};
        return table[k];
    }

    constexpr Unit inverse() const { return Unit(6 - k); }

    friend constexpr Unit operator*(Unit x, Unit y) { return Unit(x.k + y.k); }
    friend constexpr bool operator==(Unit, Unit) = default;

    template <Integer I>
    static std::optional<Unit> from_element(const EisensteinInt<I>& x) {
        for (int k = 0; k < 6; ++k) {
            if (Unit(k).value<I>() == x) return Unit(k);
        }
        return std::nullopt;
    }

    static constexpr std::array<Unit, 6> all() { return {Unit(0), Unit(1), Unit(2), Unit(3), Unit(4), Unit(5)}; }
};

template <Integer I>
EisensteinInt<I> operator*(Unit u, const EisensteinInt<I>& x) {
    return u.value<I>() * x;
}

template <Integer I>
bool is_unit(const EisensteinInt<I>& x) {
    return x.norm() == 1;
}

// ---------------------------------------------------------------------------
// Division

template <Integer I>
struct DivMod {
    EisensteinInt<I> quotient;
    EisensteinInt<I> remainder;
};

/// Euclidean division: x = q*y + r with norm(r) < norm(y). Both rational
/// coordinates of x/y are rounded to the nearest integer, halves toward zero.
template <Integer I>
DivMod<I> divmod(const EisensteinInt<I>& x, const EisensteinInt<I>& y) {
    if (y.is_zero()) throw std::domain_error("divmod: division by zero");
    I n = y.norm();
    EisensteinInt<I> num = x * y.conj();
    EisensteinInt<I> q{detail::round_div(num.a(), n), detail::round_div(num.b(), n)};
    return {q, x - q * y};
}

template <Integer I>
EisensteinInt<I> mod(const EisensteinInt<I>& x, const EisensteinInt<I>& y) {
    return divmod(x, y).remainder;
}

/// True iff y | x. Zero divides only zero.
template <Integer I>
bool divides(const EisensteinInt<I>& y, const EisensteinInt<I>& x) {
    if (y.is_zero()) return x.is_zero();
    I n = y.norm();
    EisensteinInt<I> num = x * y.conj();
    return num.a() % n == 0 && num.b() % n == 0;
}

/// x / y for y | x; throws otherwise.
template <Integer I>
EisensteinInt<I> exact_div(const EisensteinInt<I>& x, const EisensteinInt<I>& y) {
    if (y.is_zero()) throw std::domain_error("exact_div: division by zero");
    I n = y.norm();
    EisensteinInt<I> num = x * y.conj();
    if (num.a() % n != 0 || num.b() % n != 0) throw std::domain_error("exact_div: not divisible");
    return {I(num.a() / n), I(num.b() / n)};
}

/// m | (x - y)
template <Integer I>
bool congruent(const EisensteinInt<I>& x, const EisensteinInt<I>& y, const EisensteinInt<I>& m) {
    return divides(m, x - y);
}

/// lambda^k
template <Integer I>
EisensteinInt<I> lambda_pow(unsigned k) {
    return EisensteinInt<I>::lambda().pow(k);
}

/// Largest k with lambda^k | x (x nonzero).
template <Integer I>
int lambda_valuation(EisensteinInt<I> x) {
    if (x.is_zero()) throw std::domain_error("lambda_valuation: zero");
    const auto lam = EisensteinInt<I>::lambda();
    int k = 0;
    while (divides(lam, x)) {
        x = exact_div(x, lam);
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------------------
// Associates

/// The unique associate congruent to 1 mod 3 (equivalently mod lambda^2).
template <Integer I>
EisensteinInt<I> primary2_assoc(const EisensteinInt<I>& x) {
    if (divides(EisensteinInt<I>::lambda(), x))
        throw std::domain_error("primary2_assoc: argument divisible by lambda");
    std::optional<EisensteinInt<I>> found;
    for (Unit u : Unit::all()) {
        EisensteinInt<I> y = u * x;
        if (detail::mod(I(y.a() - 1), I(3)) == 0 && detail::mod(y.b(), I(3)) == 0) {
            if (found) throw std::logic_error("primary2_assoc: two associates congruent to 1 mod 3");
            found = y;
        }
    }
    if (!found) throw std::logic_error("primary2_assoc: no associate congruent to 1 mod 3");
    return *found;
}

/// The associate congruent to 1 mod lambda^3, if one exists.
template <Integer I>
std::optional<EisensteinInt<I>> primary3_assoc(const EisensteinInt<I>& x) {
    if (divides(EisensteinInt<I>::lambda(), x))
        throw std::domain_error("primary3_assoc: argument divisible by lambda");
    const auto lam3 = lambda_pow<I>(3);
    for (Unit u : Unit::all()) {
        EisensteinInt<I> y = u * x;
        if (congruent(y, EisensteinInt<I>::one(), lam3)) return y;
    }
    return std::nullopt;
}

/// lambda^k times the primary2 associate of the lambda-free part; zero maps to zero.
template <Integer I>
EisensteinInt<I> canonical_associate(const EisensteinInt<I>& x) {
    if (x.is_zero()) return x;
    const auto lam = EisensteinInt<I>::lambda();
    EisensteinInt<I> rest = x;
    unsigned k = 0;
    while (divides(lam, rest)) {
        rest = exact_div(rest, lam);
        ++k;
    }
    return lambda_pow<I>(k) * primary2_assoc(rest);
}

template <Integer I>
bool are_associates(const EisensteinInt<I>& x, const EisensteinInt<I>& y) {
    for (Unit u : Unit::all()) {
        if (u * x == y) return true;
    }
    return false;
}

/// Greatest common divisor in canonical associate form.
template <Integer I>
EisensteinInt<I> gcd(EisensteinInt<I> x, EisensteinInt<I> y) {
    if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd: both arguments zero");
    while (!y.is_zero()) {
        EisensteinInt<I> r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return canonical_associate(x);
}

} // namespace zeta3pell
