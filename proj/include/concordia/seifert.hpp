// Seifert matrices: validation, the genus-one family, Alexander polynomials,
// connected sum / mirror, and metabolizer searches.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "concordia/errors.hpp"
#include "concordia/intmatrix.hpp"
#include "concordia/kronecker.hpp"
#include "concordia/laurent.hpp"

namespace concordia {

/// Square integer matrix of even size 2g with det(S - S^T) = 1.  The 0x0
/// matrix represents the unknot and is treated uniformly by every operation.
class SeifertMatrix {
public:
    SeifertMatrix() = default;  // unknot

    /// Validates squareness, even size and unimodularity of S - S^T.
    static SeifertMatrix validate(const std::vector<std::vector<std::int64_t>>& rows) {
        for (const auto& r : rows)
            if (r.size() != rows.size())
                throw WrongSize("Seifert matrix must be square");
        if (rows.size() % 2 != 0) throw OddSize(rows.size());
        SeifertMatrix s;
        s.m_ = IntMatrix::from_rows(rows);
        Int d = determinant(s.m_ - s.m_.transposed());
        if (d != 1) throw NotUnimodular(d.str());
        return s;
    }

    /// Genus-one surface with derivative data (lambda, ell), in the basis
    /// {derivative, dual curve}: [[0, lambda], [lambda+1, ell]].  Always
    /// unimodular.
    static SeifertMatrix genus1(std::int64_t lambda, std::int64_t ell) {
        return validate({{0, lambda}, {lambda + 1, ell}});
    }

    std::size_t size() const { return m_.rows(); }
    std::size_t genus() const { return size() / 2; }
    const IntMatrix& entries() const { return m_; }
    bool operator==(const SeifertMatrix& o) const = default;

    static SeifertMatrix unchecked(IntMatrix m) {
        SeifertMatrix s;
        s.m_ = std::move(m);
        return s;
    }

private:
    IntMatrix m_;
};

/// det(S - t S^T) up to units, computed exactly by evaluation at 2g+1
/// integer points and Lagrange interpolation.  Satisfies Delta(1) = +-1.
inline AssocClass alexander(const SeifertMatrix& s) {
    const std::size_t n = s.size();
    if (n == 0) return AssocClass(LaurentPoly::constant(1));
    std::vector<Int> xs, ys;
    const IntMatrix st = s.entries().transposed();
    for (std::size_t k = 0; k <= n; ++k) {
        Int t = Int(k);
        xs.push_back(t);
        ys.push_back(determinant(s.entries() - t * st));
    }
    auto poly = detail::interpolate_integer(xs, ys);
    if (!poly) throw std::logic_error("alexander: interpolation left the integers");
    return AssocClass(zp_to_laurent(*poly));
}

inline SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    IntMatrix m(a.size() + b.size(), a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) m(i, j) = a.entries()(i, j);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            m(a.size() + i, a.size() + j) = b.entries()(i, j);
    return SeifertMatrix::unchecked(std::move(m));
}

/// Reverse of the mirror image: -S^T.  Inverts concordance classes.
inline SeifertMatrix mirror(const SeifertMatrix& s) {
    return SeifertMatrix::unchecked(-s.entries().transposed());
}

/// Exact rank-1 metabolizer test for 2x2 matrices: a primitive integer
/// vector v with v^T S v = 0, decided through the discriminant of the
/// binary quadratic form.
inline std::optional<std::vector<std::int64_t>> metabolizer_genus1(const SeifertMatrix& s) {
    if (s.size() != 2) throw WrongSize("metabolizer_genus1 expects a 2x2 matrix");
    const Int a = s.entries()(0, 0), b = s.entries()(0, 1);
    const Int c = s.entries()(1, 0), d = s.entries()(1, 1);
    auto verified = [&](Int x, Int y) -> std::vector<std::int64_t> {
        Int g = gcd(x, y);
        x /= g;
        y /= g;
        if (a * x * x + (b + c) * x * y + d * y * y != 0)
            throw std::logic_error("metabolizer_genus1: candidate failed verification");
        return {static_cast<std::int64_t>(x), static_cast<std::int64_t>(y)};
    };
    if (a == 0) return verified(1, 0);
    if (d == 0) return verified(0, 1);
    const Int B = b + c;
    const Int disc = B * B - 4 * a * d;
    if (disc < 0) return std::nullopt;
    auto k = perfect_square_root(disc);
    if (!k) return std::nullopt;
    return verified(-B + *k, 2 * a);
}

namespace detail {

inline Int bilinear(const IntMatrix& S, const std::vector<Int>& u, const std::vector<Int>& v) {
    Int acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) acc += u[i] * S(i, j) * v[j];
    return acc;
}

// Primitive vectors of max-norm <= h in dimension n, first nonzero entry
// positive, enumerated lexicographically.
inline std::vector<std::vector<Int>> primitive_candidates(std::size_t n, std::int64_t h) {
    std::vector<std::vector<Int>> out;
    std::vector<std::int64_t> v(n, -h);
    while (true) {
        std::int64_t g = 0;
        int first_sign = 0;
        for (auto x : v) {
            g = gcd_i64(g, x);
            if (first_sign == 0 && x != 0) first_sign = x > 0 ? 1 : -1;
        }
        if (g == 1 && first_sign > 0) out.emplace_back(v.begin(), v.end());
        std::size_t i = n;
        while (i-- > 0) {
            if (v[i] < h) {
                ++v[i];
                for (std::size_t j = i + 1; j < n; ++j) v[j] = -h;
                break;
            }
            if (i == 0) return out;
        }
    }
}

inline std::vector<Rational> reduce_row(const std::vector<std::vector<Rational>>& echelon,
                                        const std::vector<Int>& v) {
    std::vector<Rational> w(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) w[i] = Rational(v[i]);
    for (const auto& row : echelon) {
        std::size_t piv = 0;
        while (piv < row.size() && row[piv] == 0) ++piv;
        if (piv < row.size() && w[piv] != 0) {
            Rational f = w[piv] / row[piv];
            for (std::size_t j = piv; j < w.size(); ++j) w[j] -= f * row[j];
        }
    }
    return w;
}

inline bool isotropic_dfs(const IntMatrix& S, const std::vector<std::vector<Int>>& cands,
                          std::size_t start, std::vector<std::vector<Int>>& basis,
                          std::vector<std::vector<Rational>>& echelon, std::size_t target) {
    if (basis.size() == target) {
        IntMatrix B(target, S.rows());
        for (std::size_t i = 0; i < target; ++i)
            for (std::size_t j = 0; j < S.rows(); ++j) B(i, j) = basis[i][j];
        return maximal_minor_gcd(B) == 1;
    }
    for (std::size_t i = start; i < cands.size(); ++i) {
        const auto& v = cands[i];
        if (bilinear(S, v, v) != 0) continue;
        bool ok = true;
        for (const auto& u : basis)
            if (bilinear(S, u, v) != 0 || bilinear(S, v, u) != 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        auto reduced = reduce_row(echelon, v);
        bool indep = false;
        for (const auto& x : reduced)
            if (x != 0) {
                indep = true;
                break;
            }
        if (!indep) continue;
        basis.push_back(v);
        echelon.push_back(reduced);
        if (isotropic_dfs(S, cands, i + 1, basis, echelon, target)) return true;
        basis.pop_back();
        echelon.pop_back();
    }
    return false;
}

}  // namespace detail

/// Bounded search for a half-rank isotropic direct summand: g vectors of
/// max-norm <= height spanning a summand of Z^{2g} on which the form
/// vanishes identically.  "Not found" is only a certificate up to the bound.
inline std::optional<std::vector<std::vector<std::int64_t>>> isotropic_search(
    const SeifertMatrix& s, std::int64_t height) {
    const std::size_t g = s.genus();
    if (g < 1) throw WrongSize("isotropic_search expects genus >= 1");
    auto cands = detail::primitive_candidates(s.size(), height);
    std::vector<std::vector<Int>> basis;
    std::vector<std::vector<Rational>> echelon;
    if (!detail::isotropic_dfs(s.entries(), cands, 0, basis, echelon, g)) return std::nullopt;
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& v : basis) {
        std::vector<std::int64_t> row;
        for (const auto& x : v) row.push_back(static_cast<std::int64_t>(x));
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace concordia
