// Rational factorization of integer Laurent polynomials by Kronecker
// interpolation, and the polynomial-level concordance tests built on it:
// the Fox-Milnor factorization test and the eigen-annihilator search for
// divisors of the binomials a*t^p - b.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "concordia/dense_poly.hpp"
#include "concordia/errors.hpp"
#include "concordia/laurent.hpp"

namespace concordia {

inline constexpr long kFactorDegreeGuard = 12;

struct Factorization {
    Int content = 1;                 // positive
    std::vector<ZPoly> factors;      // irreducible, primitive, positive leading, sorted
};

namespace detail {

// Deterministic evaluation points 0, 1, -1, 2, -2, ...
inline Int kronecker_point(std::size_t i) {
    if (i == 0) return 0;
    Int k = (i + 1) / 2;
    return (i % 2) ? k : -k;
}

inline bool zp_less(const ZPoly& a, const ZPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

// Lagrange interpolation through (x_i, y_i); nullopt when the result is not
// an integer polynomial.
inline std::optional<ZPoly> interpolate_integer(const std::vector<Int>& xs,
                                                const std::vector<Int>& ys) {
    const std::size_t n = xs.size();
    QPoly acc;  // zero
    for (std::size_t i = 0; i < n; ++i) {
        QPoly basis{Rational(1)};
        Rational denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            basis = qp_mul(basis, QPoly{Rational(-xs[j]), Rational(1)});
            denom *= Rational(xs[i] - xs[j]);
        }
        acc = qp_sub(acc, qp_scale(basis, -Rational(ys[i]) / denom));
    }
    ZPoly z(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (den(acc[i]) != 1) return std::nullopt;
        z[i] = num(acc[i]);
    }
    zp_trim(z);
    return z;
}

// Depth-first enumeration of divisor tuples with the classical pruning: a
// polynomial with integer coefficients satisfies (x_i - x_j) | (y_i - y_j),
// so partial tuples failing that are cut before interpolation.
inline bool kronecker_tuples(const ZPoly& Q, long d, const std::vector<Int>& xs,
                             const std::vector<std::vector<Int>>& choices, std::size_t depth,
                             std::vector<Int>& ys, ZPoly& out) {
    if (depth == xs.size()) {
        auto cand = interpolate_integer(xs, ys);
        if (!cand || zp_degree(*cand) != d || zp_content(*cand) != 1) return false;
        ZPoly g = *cand;
        if (g.back() < 0)
            for (auto& c : g) c = -c;
        if (!zp_divide_exact(Q, g)) return false;
        out = std::move(g);
        return true;
    }
    for (const auto& y : choices[depth]) {
        bool ok = true;
        for (std::size_t j = 0; j < depth; ++j) {
            Int dx = xs[depth] - xs[j];
            if ((y - ys[j]) % dx != 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        ys[depth] = y;
        if (kronecker_tuples(Q, d, xs, choices, depth + 1, ys, out)) return true;
    }
    return false;
}

// One irreducible factor of a primitive Q with deg >= 1, or nullopt when Q
// is irreducible.  Factors of degree up to deg(Q)/2 are searched; integer
// roots are picked up by divisor tuples at degree 1.
inline std::optional<ZPoly> kronecker_factor(const ZPoly& Q) {
    const long n = zp_degree(Q);
    if (n <= 1) return std::nullopt;
    for (long d = 1; d <= n / 2; ++d) {
        std::vector<Int> xs;
        std::vector<Int> vals;
        for (std::size_t i = 0; xs.size() < static_cast<std::size_t>(d) + 1; ++i) {
            Int x = kronecker_point(i);
            Int v = zp_eval(Q, x);
            if (v == 0) {
                // x is an integer root: t - x is already an irreducible factor.
                ZPoly lin{-x, Int(1)};
                return lin;
            }
            xs.push_back(x);
            vals.push_back(v);
        }
        std::vector<std::vector<Int>> choices(xs.size());
        for (std::size_t i = 0; i < xs.size(); ++i) {
            auto divs = positive_divisors(vals[i]);
            if (i == 0) {
                // Sign of the first value can be fixed: g and -g divide together.
                choices[i] = divs;
            } else {
                for (const auto& dv : divs) {
                    choices[i].push_back(dv);
                    choices[i].push_back(-dv);
                }
            }
        }
        std::vector<Int> ys(xs.size());
        ZPoly found;
        if (kronecker_tuples(Q, d, xs, choices, 0, ys, found)) return found;
    }
    return std::nullopt;
}

}  // namespace detail

/// Factors p into integer content and irreducible primitive factors over Q.
/// Exact: content * product(factors) equals the canonical representative.
inline Factorization factor_rational(const LaurentPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_rational: zero polynomial");
    ZPoly P = zp_from_canonical(p);
    if (zp_degree(P) > kFactorDegreeGuard) throw DegreeGuardExceeded(zp_degree(P));

    Factorization out;
    out.content = zp_content(P);  // positive since the canonical leading coeff is
    ZPoly Q = zp_scale_down(P, out.content);

    std::vector<ZPoly> stack{Q};
    while (!stack.empty()) {
        ZPoly cur = std::move(stack.back());
        stack.pop_back();
        if (zp_degree(cur) < 1) continue;  // unit
        if (auto g = detail::kronecker_factor(cur)) {
            ZPoly rest = *zp_divide_exact(cur, *g);
            stack.push_back(std::move(rest));
            stack.push_back(std::move(*g));
        } else {
            out.factors.push_back(std::move(cur));
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), detail::zp_less);
    return out;
}

/// Canonical representative of t^deg * f(1/t): coefficients reversed, sign
/// fixed so the leading coefficient is positive.
inline ZPoly conjugate_partner(const ZPoly& f) {
    ZPoly r(f.rbegin(), f.rend());
    zp_trim(r);
    if (!r.empty() && r.back() < 0)
        for (auto& c : r) c = -c;
    return r;
}

/// Fox-Milnor test: does p factor as delta(t) * delta(1/t) up to units?
/// Returns the verified witness delta, or nullopt.  Self-conjugate
/// irreducible factors must occur with even multiplicity, conjugate pairs
/// with equal multiplicity, and the integer content must be a perfect
/// square.
inline std::optional<LaurentPoly> fox_milnor(const LaurentPoly& p) {
    Factorization f = factor_rational(p);

    auto root = perfect_square_root(f.content);
    if (!root) return std::nullopt;

    std::vector<std::pair<ZPoly, int>> classes;  // factor -> multiplicity
    for (const auto& g : f.factors) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](const auto& c) { return c.first == g; });
        if (it == classes.end())
            classes.emplace_back(g, 1);
        else
            ++it->second;
    }

    LaurentPoly delta = LaurentPoly::constant(*root);
    for (const auto& [g, mult] : classes) {
        ZPoly partner = conjugate_partner(g);
        if (partner == g) {
            if (mult % 2 != 0) return std::nullopt;
            for (int i = 0; i < mult / 2; ++i) delta = delta * zp_to_laurent(g);
        } else if (detail::zp_less(g, partner)) {
            auto it = std::find_if(classes.begin(), classes.end(),
                                   [&](const auto& c) { return c.first == partner; });
            if (it == classes.end() || it->second != mult) return std::nullopt;
            for (int i = 0; i < mult; ++i) delta = delta * zp_to_laurent(g);
        } else {
            // handled together with the partner
            auto it = std::find_if(classes.begin(), classes.end(),
                                   [&](const auto& c) { return c.first == partner; });
            if (it == classes.end() || it->second != mult) return std::nullopt;
        }
    }

    // The pairing argument guarantees this, but the contract requires the
    // witness to be re-verified before it is returned.
    if (!(normalize_assoc(delta * conjugate(delta)) == normalize_assoc(p)))
        throw std::logic_error("fox_milnor: witness failed verification");
    return delta;
}

struct EigenAnnihilator {
    Int a, b;         // gcd(a, b) = 1, a > 0
    std::int64_t p;   // minimal exponent with delta | a t^p - b
};

/// Searches for minimal p <= p_max with delta | a t^p - b by computing
/// t^p in Q[t]/(delta).  delta must be a primitive irreducible non-monomial.
inline std::optional<EigenAnnihilator> eigen_annihilator(const LaurentPoly& delta,
                                                         std::int64_t p_max = 64) {
    if (delta.is_zero()) throw NotIrreducible("zero polynomial");
    ZPoly D = zp_from_canonical(delta);
    if (zp_degree(D) < 1) throw NotIrreducible("monomials are units up to association");
    {
        Factorization f = factor_rational(delta);
        if (f.content != 1 || f.factors.size() != 1 || f.factors[0] != D)
            throw NotIrreducible("input is not irreducible: " + delta.display());
    }

    QPoly mod = qp_from_zp(D);
    QPoly x{Rational(0), Rational(1)};  // t
    QPoly power = qp_rem(x, mod);
    for (std::int64_t p = 1; p <= p_max; ++p) {
        if (qp_degree(power) <= 0) {
            Rational q = power.empty() ? Rational(0) : power[0];
            Int a = den(q), b = num(q);
            // verify exact divisibility of a t^p - b by delta over Q
            QPoly bin(static_cast<std::size_t>(p) + 1, Rational(0));
            bin[0] = -Rational(b);
            bin[static_cast<std::size_t>(p)] = Rational(a);
            if (!qp_rem(bin, mod).empty())
                throw std::logic_error("eigen_annihilator: divisibility check failed");
            return EigenAnnihilator{a, b, p};
        }
        power = qp_rem(qp_mul(power, x), mod);
    }
    return std::nullopt;
}

/// For symmetric p with canonical representative of even degree 2d, returns
/// the degree-d integer polynomial q with t^-d p(t) = q(t + 1/t), via
/// t^j + t^-j = z (t^{j-1} + t^{1-j}) - (t^{j-2} + t^{2-j}).
inline ZPoly cos_substitute(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    ZPoly C = zp_from_canonical(p);
    long D = zp_degree(C);
    if (D % 2 != 0) throw OddDegree();
    long d = D / 2;
    for (long j = 0; j <= D; ++j)
        if (C[static_cast<std::size_t>(j)] != C[static_cast<std::size_t>(D - j)])
            throw NotSymmetric();

    ZPoly q{C[static_cast<std::size_t>(d)]};
    ZPoly t_prev{Int(2)};          // t^0 + t^0
    ZPoly t_cur{Int(0), Int(1)};   // t^1 + t^-1 = z
    const ZPoly z{Int(0), Int(1)};
    for (long j = 1; j <= d; ++j) {
        const Int& coeff = C[static_cast<std::size_t>(d + j)];
        if (t_cur.size() > q.size()) q.resize(t_cur.size(), Int(0));
        for (std::size_t i = 0; i < t_cur.size(); ++i) q[i] += coeff * t_cur[i];
        ZPoly next = zp_sub(zp_mul(z, t_cur), t_prev);
        t_prev = std::move(t_cur);
        t_cur = std::move(next);
    }
    zp_trim(q);
    return q;
}

}  // namespace concordia
