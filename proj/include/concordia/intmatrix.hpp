// Small dense integer matrices with exact (Bareiss) determinants.
#pragma once

#include <cstdint>
#include <vector>

#include "concordia/numeric.hpp"

namespace concordia {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const = default;

    IntMatrix transposed() const {
        IntMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= b.data_[k];
        return r;
    }
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r = a;
        for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += b.data_[k];
        return r;
    }
    IntMatrix operator-() const {
        IntMatrix r = *this;
        for (auto& v : r.data_) v = -v;
        return r;
    }
    friend IntMatrix operator*(const Int& s, const IntMatrix& a) {
        IntMatrix r = a;
        for (auto& v : r.data_) v *= s;
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        std::vector<Int> r(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
        return r;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// Fraction-free Bareiss determinant.  Exact over the integers.
inline Int determinant(IntMatrix m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

/// gcd of all maximal minors of a g x n matrix (g <= n), 0 if rank deficient.
/// A full-rank integer row span is a direct summand of Z^n iff this is 1.
inline Int maximal_minor_gcd(const IntMatrix& m) {
    const std::size_t g = m.rows(), n = m.cols();
    std::vector<std::size_t> cols(g);
    for (std::size_t i = 0; i < g; ++i) cols[i] = i;
    Int acc = 0;
    while (true) {
        IntMatrix sub(g, g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j) sub(i, j) = m(i, cols[j]);
        acc = gcd(acc, determinant(sub));
        if (acc == 1) return acc;
        // next combination
        std::size_t i = g;
        while (i-- > 0) {
            if (cols[i] + (g - i) < n) {
                ++cols[i];
                for (std::size_t j = i + 1; j < g; ++j) cols[j] = cols[j - 1] + 1;
                break;
            }
            if (i == 0) return acc;
        }
    }
}

}  // namespace concordia
