// Finite-support Fourier series on the n-torus and the analysis-lemma
// machinery: exponent composition w -> w^M / w^d, axis marginals, the
// eigenvector dichotomy for M acting on e_1, and the exact case-2 identity
//     s(w^{d^{p-1}}) = g(w^lambda) - g(w^{d^p}),  g = axis marginal of f.
#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "concordia/errors.hpp"
#include "concordia/intmatrix.hpp"
#include "concordia/numeric.hpp"

namespace concordia {

/// Finitely supported map from exponent vectors in Z^n to rational
/// coefficients.  No zero coefficients are stored.
class FourierSeries {
public:
    using Exponent = std::vector<std::int64_t>;
    using Map = std::map<Exponent, Rational>;

    explicit FourierSeries(int dimension = 1) : n_(dimension) {}

    int dimension() const { return n_; }
    const Map& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    void add(const Exponent& exp, const Rational& c) {
        if (static_cast<int>(exp.size()) != n_)
            throw DimensionMismatch("exponent vector has length " + std::to_string(exp.size()) +
                                    ", series has dimension " + std::to_string(n_));
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Rational coefficient(const Exponent& exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    static FourierSeries monomial(const Exponent& exp, const Rational& c = 1) {
        FourierSeries f(static_cast<int>(exp.size()));
        f.add(exp, c);
        return f;
    }

    friend FourierSeries operator+(const FourierSeries& a, const FourierSeries& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("series dimensions differ");
        FourierSeries r = a;
        for (const auto& [e, c] : b.coeffs_) r.add(e, c);
        return r;
    }
    friend FourierSeries operator-(const FourierSeries& a, const FourierSeries& b) {
        if (a.n_ != b.n_) throw DimensionMismatch("series dimensions differ");
        FourierSeries r = a;
        for (const auto& [e, c] : b.coeffs_) r.add(e, -c);
        return r;
    }
    bool operator==(const FourierSeries& o) const = default;

    /// Total coefficient mass (preserved by exponent composition).
    Rational mass() const {
        Rational acc = 0;
        for (const auto& [e, c] : coeffs_) acc += c;
        return acc;
    }

    /// One line per term: "coeff i1 i2 ... in".
    std::string serialize() const {
        std::ostringstream os;
        for (const auto& [e, c] : coeffs_) {
            os << to_string(c);
            for (auto x : e) os << ' ' << x;
            os << '\n';
        }
        return os.str();
    }

    static FourierSeries parse(std::istream& in, int dimension) {
        FourierSeries f(dimension);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            std::string ctok;
            if (!(ls >> ctok)) continue;
            Rational c = parse_rational(ctok);
            Exponent e;
            std::int64_t x;
            while (ls >> x) e.push_back(x);
            if (static_cast<int>(e.size()) != dimension)
                throw ParseError("series line has wrong exponent count: " + line);
            f.add(e, c);
        }
        return f;
    }

private:
    int n_;
    Map coeffs_;
};

/// The exponent actions of the lemma: an integer matrix M with nonzero
/// determinant, or a nonzero scalar d.
struct ExponentAction {
    IntMatrix M;
    std::int64_t d = 1;
    bool is_matrix = false;

    static ExponentAction matrix(IntMatrix m) {
        if (determinant(m) == 0)
            throw std::invalid_argument("exponent action matrix must have nonzero determinant");
        return {std::move(m), 0, true};
    }
    static ExponentAction scalar(std::int64_t d) {
        if (d == 0) throw std::invalid_argument("scalar exponent action must be nonzero");
        return {IntMatrix(), d, false};
    }
};

namespace detail {

inline std::int64_t checked_i64(const Int& x) {
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw std::overflow_error("exponent out of range");
    return static_cast<std::int64_t>(x);
}

}  // namespace detail

/// Coefficient of exponent I accumulates onto exponent M*I (or d*I);
/// collisions are summed and cancellations dropped.
inline FourierSeries fourier_compose(const FourierSeries& f, const ExponentAction& action) {
    FourierSeries r(f.dimension());
    for (const auto& [e, c] : f.coefficients()) {
        FourierSeries::Exponent target(e.size());
        if (action.is_matrix) {
            if (action.M.rows() != e.size())
                throw DimensionMismatch("matrix action size does not match series dimension");
            std::vector<Int> v(e.begin(), e.end());
            auto w = action.M.apply(v);
            for (std::size_t i = 0; i < w.size(); ++i) target[i] = detail::checked_i64(w[i]);
        } else {
            for (std::size_t i = 0; i < e.size(); ++i) target[i] = e[i] * action.d;
        }
        r.add(target, c);
    }
    return r;
}

inline FourierSeries fourier_compose(const FourierSeries& f, const IntMatrix& M) {
    return fourier_compose(f, ExponentAction::matrix(M));
}
inline FourierSeries fourier_compose(const FourierSeries& f, std::int64_t d) {
    return fourier_compose(f, ExponentAction::scalar(d));
}

/// Restriction to exponents supported on the first coordinate axis,
/// returned as a one-variable series.
inline FourierSeries axis_marginal(const FourierSeries& f) {
    FourierSeries r(1);
    for (const auto& [e, c] : f.coefficients()) {
        bool on_axis = true;
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i] != 0) {
                on_axis = false;
                break;
            }
        if (on_axis) r.add({e.empty() ? 0 : e[0]}, c);
    }
    return r;
}

struct Case2 {
    std::int64_t p;  // minimal power with M^p e1 = lambda e1
    Int lambda;
};
struct Case1UpToBound {
    std::int64_t bound;
};
using EigenDichotomy = std::variant<Case1UpToBound, Case2>;

/// Whether e_1 becomes an eigenvector of M^p for some p <= bound.
inline EigenDichotomy eigen_dichotomy(const IntMatrix& M, std::int64_t p_bound = 64) {
    if (M.rows() != M.cols() || determinant(M) == 0)
        throw std::invalid_argument("eigen_dichotomy requires a square nonsingular matrix");
    std::vector<Int> v(M.rows(), Int(0));
    v[0] = 1;
    for (std::int64_t p = 1; p <= p_bound; ++p) {
        v = M.apply(v);
        bool parallel = true;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] != 0) {
                parallel = false;
                break;
            }
        if (parallel) return Case2{p, v[0]};
    }
    return Case1UpToBound{p_bound};
}

enum class Case2Identity { verified, failed, not_applicable };

struct LemmaReport {
    FourierSeries difference;         // f(w^M) - f(w^d)
    FourierSeries off_axis_residual;  // difference minus its axis part
    FourierSeries s;                  // one-variable axis part of the difference
    EigenDichotomy dichotomy;
    Case2Identity case2_identity = Case2Identity::not_applicable;

    LemmaReport() : difference(1), off_axis_residual(1), s(1), dichotomy(Case1UpToBound{0}) {}
};

/// Forms D = f(w^M) - f(w^d), splits off the axis part s, and in case 2
/// checks the lemma's identity as an exact coefficient equality.
inline LemmaReport lemma_check(const FourierSeries& f, const IntMatrix& M, std::int64_t d,
                               std::int64_t p_bound = 64) {
    LemmaReport rep;
    rep.difference = fourier_compose(f, M) - fourier_compose(f, d);
    rep.s = axis_marginal(rep.difference);

    FourierSeries axis_embedded(f.dimension());
    for (const auto& [e, c] : rep.s.coefficients()) {
        FourierSeries::Exponent full(f.dimension(), 0);
        full[0] = e[0];
        axis_embedded.add(full, c);
    }
    rep.off_axis_residual = rep.difference - axis_embedded;

    rep.dichotomy = eigen_dichotomy(M, p_bound);
    if (std::holds_alternative<Case2>(rep.dichotomy) && rep.off_axis_residual.is_zero()) {
        const auto& c2 = std::get<Case2>(rep.dichotomy);
        Int dp1 = 1, dp = 1;
        for (std::int64_t i = 0; i < c2.p - 1; ++i) dp1 *= d;
        dp = dp1 * d;
        FourierSeries g = axis_marginal(f);
        FourierSeries lhs = fourier_compose(rep.s, detail::checked_i64(dp1));
        FourierSeries rhs = fourier_compose(g, detail::checked_i64(c2.lambda)) -
                            fourier_compose(g, detail::checked_i64(dp));
        rep.case2_identity = (lhs == rhs) ? Case2Identity::verified : Case2Identity::failed;
    }
    return rep;
}

/// Constructive converse for case 2: from a one-variable g builds the
/// n-variable witness f = sum_k c_k sum_{j=0}^{p-1} w^{v_j(k)} with
/// v_j(k) = d^{p-1-j} M^j (k e_1), whose difference D collapses to
/// sum_k c_k (w_1^{lambda k} - w_1^{d^p k}).
inline FourierSeries case2_witness(const FourierSeries& g, const IntMatrix& M, std::int64_t d,
                                   std::int64_t p_bound = 64) {
    if (g.dimension() != 1)
        throw DimensionMismatch("case2_witness takes a one-variable series");
    auto dich = eigen_dichotomy(M, p_bound);
    if (!std::holds_alternative<Case2>(dich))
        throw CaseOne("e_1 is not an eigenvector of any power of M up to the bound");
    const auto& c2 = std::get<Case2>(dich);

    const std::size_t n = M.rows();
    FourierSeries f(static_cast<int>(n));
    for (const auto& [e, c] : g.coefficients()) {
        const std::int64_t k = e[0];
        std::vector<Int> v(n, Int(0));
        v[0] = k;
        // walk j = 0..p-1, maintaining M^j (k e1); scale by d^{p-1-j}
        std::vector<std::vector<Int>> mpowers{v};
        for (std::int64_t j = 1; j < c2.p; ++j) mpowers.push_back(M.apply(mpowers.back()));
        Int dpow = 1;
        for (std::int64_t j = c2.p - 1; j >= 0; --j) {
            FourierSeries::Exponent exp(n);
            for (std::size_t i = 0; i < n; ++i)
                exp[i] = detail::checked_i64(mpowers[static_cast<std::size_t>(j)][i] * dpow);
            f.add(exp, c);
            dpow *= d;
        }
    }

    // the construction promises a vanishing off-axis residual and the
    // collapsed difference; assert both
    auto rep = lemma_check(f, M, d, p_bound);
    FourierSeries want(1);
    Int dp = 1;
    for (std::int64_t i = 0; i < c2.p; ++i) dp *= d;
    for (const auto& [e, c] : g.coefficients()) {
        want.add({detail::checked_i64(c2.lambda * e[0])}, c);
        want.add({detail::checked_i64(dp * e[0])}, -c);
    }
    if (!rep.off_axis_residual.is_zero() || !(rep.s == want))
        throw std::logic_error("case2_witness: construction failed its defining identity");
    return f;
}

}  // namespace concordia
