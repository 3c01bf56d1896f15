#pragma once

// Dense linear algebra over F_3.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace zeta3pell {

inline std::uint8_t f3(long long x) { return static_cast<std::uint8_t>(((x % 3) + 3) % 3); }
inline std::uint8_t f3_add(std::uint8_t x, std::uint8_t y) { return static_cast<std::uint8_t>((x + y) % 3); }
inline std::uint8_t f3_mul(std::uint8_t x, std::uint8_t y) { return static_cast<std::uint8_t>((x * y) % 3); }
inline std::uint8_t f3_neg(std::uint8_t x) { return static_cast<std::uint8_t>((3 - x) % 3); }
/// 1^-1 = 1, 2^-1 = 2.
inline std::uint8_t f3_inv(std::uint8_t x) {
    if (x == 0) throw std::domain_error("f3_inv: zero has no inverse");
    return x;
}

class F3Vector {
public:
    F3Vector() = default;
    explicit F3Vector(std::size_t n) : v_(n, 0) {}
    F3Vector(std::initializer_list<long long> xs) {
        for (long long x : xs) v_.push_back(f3(x));
    }

    std::size_t size() const noexcept { return v_.size(); }
    std::uint8_t operator[](std::size_t i) const { return v_.at(i); }
    void set(std::size_t i, long long x) { v_.at(i) = f3(x); }
    bool is_zero() const {
        for (auto x : v_)
            if (x != 0) return false;
        return true;
    }
    const std::vector<std::uint8_t>& entries() const noexcept { return v_; }

    friend bool operator==(const F3Vector&, const F3Vector&) = default;

private:
    std::vector<std::uint8_t> v_;
};

class F3Matrix {
public:
    F3Matrix() = default;
    F3Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), m_(rows * cols, 0) {}
    F3Matrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw std::invalid_argument("F3Matrix: ragged initializer");
            for (long long x : r) m_.push_back(f3(x));
        }
    }

    static F3Matrix identity(std::size_t n) {
        F3Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint8_t operator()(std::size_t i, std::size_t j) const { return m_[i * cols_ + j]; }
    std::uint8_t at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("F3Matrix::at");
        return (*this)(i, j);
    }
    void set(std::size_t i, std::size_t j, long long x) {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("F3Matrix::set");
        m_[i * cols_ + j] = f3(x);
    }

    F3Matrix transpose() const {
        F3Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.m_[j * rows_ + i] = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    /// M v
    F3Vector operator*(const F3Vector& v) const {
        if (v.size() != cols_) throw std::invalid_argument("F3Matrix * F3Vector: dimension mismatch");
        F3Vector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            unsigned acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) acc += unsigned((*this)(i, j)) * v[j];
            out.set(i, acc);
        }
        return out;
    }

    /// v^T M
    F3Vector left_multiply(const F3Vector& v) const { return transpose() * v; }

    const std::vector<std::uint8_t>& entries() const noexcept { return m_; }

    friend bool operator==(const F3Matrix&, const F3Matrix&) = default;

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += char('0' + (*this)(i, j));
            }
            s += "]\n";
        }
        return s;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::uint8_t> m_;
};

namespace detail {

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::uint8_t>& a, std::size_t rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
        std::uint8_t inv = f3_inv(a[r * cols + c]);
        if (inv != 1)
            for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f3_mul(a[r * cols + j], inv);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint8_t f = a[i * cols + c];
            if (f == 0) continue;
            std::uint8_t nf = f3_neg(f);
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = f3_add(a[i * cols + j], f3_mul(nf, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank(const F3Matrix& m) {
    // Forward elimination only.
    std::vector<std::uint8_t> a = m.entries();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(a[p * cols + j], a[r * cols + j]);
        const std::uint8_t pv = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::uint8_t f = a[i * cols + c];
            if (f == 0) continue;
            // row_i -= (f / pv) row_r; in F_3, f/pv = f*pv
            std::uint8_t k = f3_neg(f3_mul(f, pv));
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] = static_cast<std::uint8_t>((a[i * cols + j] + k * a[r * cols + j]) % 3);
        }
        ++r;
    }
    return r;
}

/// Basis of the right kernel {v : M v = 0}; size cols - rank.
inline std::vector<F3Vector> kernel_basis(const F3Matrix& m) {
    std::vector<std::uint8_t> a = m.entries();
    const std::size_t cols = m.cols();
    auto pivots = detail::rref(a, m.rows(), cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<F3Vector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        F3Vector v(cols);
        v.set(free, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v.set(pivots[r], f3_neg(a[r * cols + free]));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Uniform draws from {0,1,2} using rejection on bytes (243 = 3^5 values kept),
/// so the stream depends only on the generator output.
template <std::uniform_random_bit_generator G>
class TritSource {
public:
    explicit TritSource(G& gen) : gen_(gen) {}

    std::uint8_t next() {
        if (left_ == 0) refill();
        std::uint8_t t = static_cast<std::uint8_t>(buf_ % 3);
        buf_ /= 3;
        --left_;
        return t;
    }

private:
    void refill() {
        for (;;) {
            if (bytes_left_ == 0) {
                word_ = static_cast<std::uint64_t>(gen_());
                bytes_left_ = sizeof(typename G::result_type) >= 8 ? 8 : 4;
            }
            unsigned byte = static_cast<unsigned>(word_ & 0xff);
            word_ >>= 8;
            --bytes_left_;
            if (byte < 243) {
                buf_ = byte;
                left_ = 5;
                return;
            }
        }
    }

    G& gen_;
    std::uint64_t word_ = 0;
    int bytes_left_ = 0;
    unsigned buf_ = 0;
    int left_ = 0;
};

/// Uniform symmetric n x n matrix: the n(n+1)/2 upper-triangular entries are iid uniform.
template <std::uniform_random_bit_generator G>
F3Matrix random_symmetric(std::size_t n, G& gen) {
    if (n == 0) throw std::invalid_argument("random_symmetric: n must be positive");
    TritSource<G> trits(gen);
    F3Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            std::uint8_t t = trits.next();
            m.set(i, j, t);
            m.set(j, i, t);
        }
    }
    return m;
}

/// Exact corank law of a uniform symmetric n x n matrix over F_3 by
/// enumerating all 3^(n(n+1)/2) matrices (n <= 4).
inline std::map<std::size_t, BigRational> exact_corank_distribution(std::size_t n) {
    if (n == 0 || n > 4) throw std::domain_error("exact_corank_distribution: n must be in 1..4");
    const std::size_t slots = n * (n + 1) / 2;
    std::size_t total = 1;
    for (std::size_t i = 0; i < slots; ++i) total *= 3;
    std::map<std::size_t, std::size_t> counts;
    F3Matrix m(n, n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                m.set(i, j, static_cast<long long>(c % 3));
                m.set(j, i, static_cast<long long>(c % 3));
                c /= 3;
            }
        }
        ++counts[n - rank(m)];
    }
    std::map<std::size_t, BigRational> out;
    for (auto [k, c] : counts) out[k] = BigRational(c, total);
    return out;
}

} // namespace zeta3pell
