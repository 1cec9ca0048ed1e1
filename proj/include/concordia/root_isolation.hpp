// Exact real-root isolation for square-free integer polynomials via Sturm
// sequences and rational bisection.
#pragma once

#include <stdexcept>
#include <vector>

#include "concordia/dense_poly.hpp"
#include "concordia/numeric.hpp"

namespace concordia {

struct SturmChain {
    std::vector<QPoly> seq;

    explicit SturmChain(const ZPoly& squarefree) {
        QPoly p0 = qp_from_zp(squarefree);
        QPoly p1 = qp_derivative(p0);
        seq.push_back(p0);
        if (!p1.empty()) seq.push_back(p1);
        while (seq.size() >= 2) {
            QPoly r = qp_rem(seq[seq.size() - 2], seq.back());
            if (r.empty()) break;
            for (auto& c : r) c = -c;
            seq.push_back(std::move(r));
        }
    }

    int variations(const Rational& x) const {
        int v = 0, prev = 0;
        for (const auto& p : seq) {
            Rational val = qp_eval(p, x);
            int s = val == 0 ? 0 : (val > 0 ? 1 : -1);
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    }

    /// Number of roots in the half-open interval (a, b].
    int count_roots(const Rational& a, const Rational& b) const {
        return variations(a) - variations(b);
    }
};

struct IsolatingInterval {
    Rational lo, hi;  // exactly one root inside, endpoints not roots
};

namespace detail {

// A point near the middle of (lo, hi) that is not a root of p.
inline Rational nonroot_split(const ZPoly& p, const Rational& lo, const Rational& hi) {
    for (int k : {8, 7, 9, 5, 11, 3, 13, 1, 15}) {
        Rational m = lo + (hi - lo) * Rational(k, 16);
        if (zp_eval(p, m) != 0) return m;
    }
    throw std::logic_error("nonroot_split: polynomial vanishes at too many points");
}

}  // namespace detail

/// Isolates all real roots of a square-free polynomial in the open interval
/// (lo, hi); endpoints must not be roots.  Intervals are returned sorted
/// ascending and pairwise disjoint.
inline std::vector<IsolatingInterval> isolate_roots(const ZPoly& squarefree,
                                                    const Rational& lo,
                                                    const Rational& hi) {
    std::vector<IsolatingInterval> out;
    if (zp_degree(squarefree) < 1) return out;
    if (zp_eval(squarefree, lo) == 0 || zp_eval(squarefree, hi) == 0)
        throw std::invalid_argument("isolate_roots: endpoint is a root");
    SturmChain chain(squarefree);
    std::vector<IsolatingInterval> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        int n = chain.count_roots(a, b);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back({a, b});
            continue;
        }
        Rational m = detail::nonroot_split(squarefree, a, b);
        work.push_back({a, m});
        work.push_back({m, b});
    }
    std::sort(out.begin(), out.end(),
              [](const IsolatingInterval& x, const IsolatingInterval& y) { return x.lo < y.lo; });
    return out;
}

/// Halves an isolating interval of a simple root (sign change present).
inline void refine_interval(const ZPoly& p, IsolatingInterval& iv) {
    Rational m = detail::nonroot_split(p, iv.lo, iv.hi);
    Rational va = zp_eval(p, iv.lo);
    Rational vm = zp_eval(p, m);
    bool left = (va > 0) != (vm > 0);
    if (left)
        iv.hi = m;
    else
        iv.lo = m;
}

}  // namespace concordia
