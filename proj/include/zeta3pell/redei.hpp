#pragma once

// Redei matrices of Kummer cubic extensions L = K(cbrt(alpha)) of K = Q(zeta3),
// alpha = zeta^z * lambda^e * prod pi_i^(a_i) with every pi_i = 1 mod lambda^3.
//
// The full n x n tame matrix is built, not the (n-1) x (n-1) pairing matrix:
// b_ij = log (pi_i/pi_j)_3 off the diagonal and the diagonal is fixed by the
// relation prod P_i^(a_i) = (cbrt(alpha)), so the exponent vector a lies in the
// kernel and "full rank" means rank n - 1.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubic_residue.hpp"
#include "eisenstein.hpp"
#include "f3.hpp"

namespace zeta3pell {

/// Which part of S_lambda(X) a field belongs to.
enum class FieldClass {
    tame,           // lambda unramified: S(X)
    zeta_ramified,  // zeta_exp != 0, lambda does not divide alpha: S'(X)
    lambda_divides  // lambda_exp != 0: S''(X)
};

inline const char* to_string(FieldClass c) {
    switch (c) {
    case FieldClass::tame: return "tame";
    case FieldClass::zeta_ramified: return "zeta";
    case FieldClass::lambda_divides: return "lambda";
    }
    return "?";
}

struct FieldSpec {
    std::vector<Eisenstein> primes;  // each = 1 mod lambda^3, pairwise non-associate
    std::vector<int> exponents;      // each in {1, 2}
    int zeta_exp = 0;                // in {0, 1, 2}
    int lambda_exp = 0;              // in {0, 1, 2}

    std::size_t size() const noexcept { return primes.size(); }

    FieldClass field_class() const {
        if (lambda_exp != 0) return FieldClass::lambda_divides;
        if (zeta_exp != 0) return FieldClass::zeta_ramified;
        return FieldClass::tame;
    }

    /// zeta^z * lambda^e * prod pi_i^(a_i)
    Eisenstein alpha() const {
        Eisenstein x = Eisenstein::zeta().pow(static_cast<unsigned>(zeta_exp)) *
                       Eisenstein::lambda().pow(static_cast<unsigned>(lambda_exp));
        for (std::size_t i = 0; i < primes.size(); ++i) x *= primes[i].pow(static_cast<unsigned>(exponents[i]));
        return x;
    }

    /// Throws std::domain_error describing the first violated invariant.
    void validate() const {
        if (primes.empty()) throw std::domain_error("FieldSpec: at least one prime required");
        if (primes.size() != exponents.size()) throw std::domain_error("FieldSpec: primes/exponents length mismatch");
        if (zeta_exp < 0 || zeta_exp > 2 || lambda_exp < 0 || lambda_exp > 2)
            throw std::domain_error("FieldSpec: zeta_exp and lambda_exp must be in {0,1,2}");
        const auto lam3 = lambda_pow<std::int64_t>(3);
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (exponents[i] != 1 && exponents[i] != 2) throw std::domain_error("FieldSpec: exponents must be 1 or 2");
            if (!is_irreducible(primes[i])) throw std::domain_error("FieldSpec: " + primes[i].str() + " is not prime");
            if (!congruent(primes[i], Eisenstein::one(), lam3))
                throw std::domain_error("FieldSpec: " + primes[i].str() + " is not 1 mod lambda^3");
            for (std::size_t j = 0; j < i; ++j)
                if (are_associates(primes[i], primes[j]))
                    throw std::domain_error("FieldSpec: primes " + primes[j].str() + " and " + primes[i].str() +
                                            " are associates");
        }
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

enum class RedeiKind {
    tame,            // n x n
    zeta_extended,   // (n+1) x (n+1), last basis vector e_lambda
    lambda_adjoined  // (n+1) x (n+1), lambda treated as an extra ramified prime
};

struct RedeiMatrix {
    F3Matrix matrix;
    F3Vector exponent_vector;
    RedeiKind kind = RedeiKind::tame;
    std::size_t n = 0;  // number of primes pi_i

    bool extended() const { return kind != RedeiKind::tame; }
    /// (e_lambda, e_lambda) of the zeta-extended matrix.
    std::uint8_t corner() const { return matrix(n, n); }
};

/// Raised when a computed pairing is not symmetric, which cubic reciprocity
/// rules out for primes = 1 mod lambda^3.
class ReciprocityViolation : public std::logic_error {
public:
    ReciprocityViolation(const Eisenstein& p, const Eisenstein& q)
        : std::logic_error("reciprocity violation between " + p.str() + " and " + q.str()), first(p), second(q) {}
    Eisenstein first;
    Eisenstein second;
};

namespace detail {

inline int symbol_log(const Eisenstein& v, const Eisenstein& w) {
    CubicSymbol s = fast_symbol(v, w);
    if (!s.is_coprime()) throw std::domain_error("Redei entry: " + v.str() + " and " + w.str() + " are not coprime");
    return s.log();
}

// Off-diagonal pairing among the pi_i plus the row-relation diagonal;
// extra_diag[i] is added inside the relation sum before inversion.
inline F3Matrix pairing_block(const FieldSpec& spec, const std::vector<int>& extra_diag) {
    const std::size_t n = spec.size();
    F3Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            int ij = symbol_log(spec.primes[i], spec.primes[j]);
            int ji = symbol_log(spec.primes[j], spec.primes[i]);
            if (ij != ji) throw ReciprocityViolation(spec.primes[i], spec.primes[j]);
            m.set(i, j, ij);
            m.set(j, i, ji);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        long long sum = extra_diag[i];
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) sum += static_cast<long long>(spec.exponents[j]) * m(j, i);
        m.set(i, i, -static_cast<long long>(f3_inv(f3(spec.exponents[i]))) * sum);
    }
    return m;
}

inline F3Vector exponent_vector(const FieldSpec& spec, std::size_t extra, int extra_value) {
    F3Vector a(spec.size() + extra);
    for (std::size_t i = 0; i < spec.size(); ++i) a.set(i, spec.exponents[i]);
    if (extra) a.set(spec.size(), extra_value);
    return a;
}

inline void check_relation(const RedeiMatrix& r) {
    if (!(r.matrix * r.exponent_vector).is_zero())
        throw std::logic_error("Redei matrix: exponent vector is not in the right kernel");
}

} // namespace detail

/// Tame Redei matrix (zeta_exp = lambda_exp = 0).
inline RedeiMatrix redei_matrix(const FieldSpec& spec) {
    spec.validate();
    if (spec.zeta_exp != 0 || spec.lambda_exp != 0) throw std::domain_error("redei_matrix: spec is not tame");
    RedeiMatrix r;
    r.kind = RedeiKind::tame;
    r.n = spec.size();
    r.matrix = detail::pairing_block(spec, std::vector<int>(spec.size(), 0));
    r.exponent_vector = detail::exponent_vector(spec, 0, 0);
    if (!r.exponent_vector.is_zero() && !r.matrix.left_multiply(r.exponent_vector).is_zero())
        throw std::logic_error("Redei matrix: exponent vector is not in the left kernel");
    detail::check_relation(r);
    return r;
}

/// Matrix for alpha = zeta^a * prod pi_i^(a_i), a != 0, on the basis
/// e_1..e_n, e_lambda. The top-left block absorbs (zeta/pi_i)_3 in its
/// diagonal, row e_lambda holds log (lambda/pi_j)_3, the e_lambda column is zero
/// above the corner, and the corner is -(sum_j a_j log (lambda/pi_j)_3) / a.
inline RedeiMatrix extended_redei_matrix(const FieldSpec& spec) {
    spec.validate();
    if (spec.zeta_exp == 0 || spec.lambda_exp != 0)
        throw std::domain_error("extended_redei_matrix: requires zeta_exp != 0 and lambda_exp = 0");
    const std::size_t n = spec.size();
    std::vector<int> zeta_terms(n);
    std::vector<int> lambda_logs(n);
    for (std::size_t i = 0; i < n; ++i) {
        zeta_terms[i] = spec.zeta_exp * detail::symbol_log(Eisenstein::zeta(), spec.primes[i]);
        lambda_logs[i] = detail::symbol_log(Eisenstein::lambda(), spec.primes[i]);
    }
    F3Matrix block = detail::pairing_block(spec, zeta_terms);
    RedeiMatrix r;
    r.kind = RedeiKind::zeta_extended;
    r.n = n;
    r.matrix = F3Matrix(n + 1, n + 1);
    long long weighted = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r.matrix.set(i, j, block(i, j));
        r.matrix.set(n, i, lambda_logs[i]);
        weighted += static_cast<long long>(spec.exponents[i]) * lambda_logs[i];
    }
    r.matrix.set(n, n, -static_cast<long long>(f3_inv(f3(spec.zeta_exp))) * weighted);
    r.exponent_vector = detail::exponent_vector(spec, 1, spec.zeta_exp);
    detail::check_relation(r);
    return r;
}

/// Matrix for alpha divisible by lambda: lambda is adjoined as an extra
/// ramified prime, paired with pi_j through log (lambda/pi_j)_3 in both
/// directions, with both diagonals fixed by the relation. The lambda entries
/// are a modelling choice rather than a proven pairing, so census uses this
/// matrix for corank statistics only, never for a verdict.
inline RedeiMatrix lambda_adjoined_redei_matrix(const FieldSpec& spec) {
    spec.validate();
    if (spec.lambda_exp == 0) throw std::domain_error("lambda_adjoined_redei_matrix: requires lambda_exp != 0");
    const std::size_t n = spec.size();
    std::vector<int> lambda_logs(n), extra(n);
    for (std::size_t i = 0; i < n; ++i) {
        lambda_logs[i] = detail::symbol_log(Eisenstein::lambda(), spec.primes[i]);
        extra[i] = spec.lambda_exp * lambda_logs[i] +
                   spec.zeta_exp * detail::symbol_log(Eisenstein::zeta(), spec.primes[i]);
    }
    F3Matrix block = detail::pairing_block(spec, extra);
    RedeiMatrix r;
    r.kind = RedeiKind::lambda_adjoined;
    r.n = n;
    r.matrix = F3Matrix(n + 1, n + 1);
    long long weighted = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r.matrix.set(i, j, block(i, j));
        r.matrix.set(n, i, lambda_logs[i]);
        r.matrix.set(i, n, lambda_logs[i]);
        weighted += static_cast<long long>(spec.exponents[i]) * lambda_logs[i];
    }
    r.matrix.set(n, n, -static_cast<long long>(f3_inv(f3(spec.lambda_exp))) * weighted);
    r.exponent_vector = detail::exponent_vector(spec, 1, spec.lambda_exp);
    detail::check_relation(r);
    return r;
}

/// Dispatches on the field class.
inline RedeiMatrix build_redei(const FieldSpec& spec) {
    switch (spec.field_class()) {
    case FieldClass::tame: return redei_matrix(spec);
    case FieldClass::zeta_ramified: return extended_redei_matrix(spec);
    case FieldClass::lambda_divides: return lambda_adjoined_redei_matrix(spec);
    }
    throw std::logic_error("build_redei: unknown field class");
}

inline std::size_t redei_rank(const RedeiMatrix& m) { return rank(m.matrix); }

/// Corank of the pairing, discounting the forced relation vector.
inline std::size_t redei_corank(const RedeiMatrix& m) {
    const std::size_t full = m.matrix.rows() - 1;
    return full - rank(m.matrix);
}

/// Full rank of the pairing, which guarantees a unit of norm zeta3. For the
/// zeta-extended matrix: the n x n block has rank n - 1 and the corner is nonzero.
inline bool positive_criterion(const RedeiMatrix& m) {
    if (m.kind == RedeiKind::zeta_extended) {
        F3Matrix block(m.n, m.n);
        for (std::size_t i = 0; i < m.n; ++i)
            for (std::size_t j = 0; j < m.n; ++j) block.set(i, j, m.matrix(i, j));
        return rank(block) + 1 == m.n && m.corner() != 0;
    }
    return rank(m.matrix) + 1 == m.matrix.rows();
}

/// True (insoluble) iff the Redei corank exceeds dim (sigma-1)Cl(L)/(sigma-1)^2.
inline bool negative_criterion(std::size_t corank, std::size_t cl_dim) { return corank > cl_dim; }

} // namespace zeta3pell
