// Dense one-variable polynomials: integer (ZPoly) and rational (QPoly)
// coefficient vectors in ascending exponent order.  Support for exact
// division, gcd, square-free parts and sign evaluation.
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "concordia/laurent.hpp"
#include "concordia/numeric.hpp"

namespace concordia {

using ZPoly = std::vector<Int>;       // index = exponent
using QPoly = std::vector<Rational>;  // index = exponent

inline void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void qp_trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline long zp_degree(const ZPoly& p) { return static_cast<long>(p.size()) - 1; }
inline long qp_degree(const QPoly& p) { return static_cast<long>(p.size()) - 1; }

inline ZPoly zp_from_canonical(const LaurentPoly& p) {
    ZPoly z;
    if (p.is_zero()) return z;
    LaurentPoly c = AssocClass::canonicalize(p);
    z.assign(static_cast<std::size_t>(c.highest_exponent()) + 1, Int(0));
    for (const auto& [e, co] : c.terms()) z[static_cast<std::size_t>(e)] = co;
    return z;
}

inline LaurentPoly zp_to_laurent(const ZPoly& p) {
    LaurentPoly r;
    for (std::size_t i = 0; i < p.size(); ++i) r.add_term(static_cast<std::int64_t>(i), p[i]);
    return r;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_trim(r);
    return r;
}

inline Int zp_eval(const ZPoly& p, const Int& x) {
    Int acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline Rational zp_eval(const ZPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

inline Int zp_content(const ZPoly& p) {
    Int g = 0;
    for (const auto& c : p) g = gcd(g, c);
    return g;  // zero polynomial -> 0
}

inline ZPoly zp_scale_down(const ZPoly& p, const Int& d) {
    ZPoly r = p;
    for (auto& c : r) c /= d;
    return r;
}

/// Exact division; nullopt when the remainder is nonzero or division leaves Z[t].
inline std::optional<ZPoly> zp_divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) return std::nullopt;
    if (a.empty()) return ZPoly{};
    if (a.size() < b.size()) return std::nullopt;
    ZPoly rem = a;
    ZPoly q(a.size() - b.size() + 1, Int(0));
    const Int& lead = b.back();
    while (rem.size() >= b.size()) {
        if (rem.back() % lead != 0) return std::nullopt;
        Int f = rem.back() / lead;
        std::size_t shift = rem.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        zp_trim(rem);
        if (rem.empty()) break;
    }
    if (!rem.empty()) return std::nullopt;
    zp_trim(q);
    return q;
}

inline QPoly qp_from_zp(const ZPoly& p) {
    QPoly q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = Rational(p[i]);
    return q;
}

inline Rational qp_eval(const QPoly& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline QPoly qp_derivative(const QPoly& p) {
    QPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(Int(i)) * p[i]);
    qp_trim(d);
    return d;
}

inline QPoly qp_scale(const QPoly& p, const Rational& s) {
    QPoly r = p;
    for (auto& c : r) c *= s;
    return r;
}

inline QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

inline QPoly qp_sub(const QPoly& a, const QPoly& b) {
    QPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qp_trim(r);
    return r;
}

/// Remainder of a by b over Q, b nonzero.
inline QPoly qp_rem(QPoly a, const QPoly& b) {
    qp_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        qp_trim(a);
    }
    return a;
}

inline QPoly qp_quotient(QPoly a, const QPoly& b) {
    qp_trim(a);
    if (a.size() < b.size()) return {};
    QPoly q(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
        qp_trim(a);
    }
    qp_trim(q);
    return q;
}

inline QPoly qp_monic(QPoly p) {
    qp_trim(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline QPoly qp_gcd(QPoly a, QPoly b) {
    qp_trim(a);
    qp_trim(b);
    while (!b.empty()) {
        QPoly r = qp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return qp_monic(a);
}

/// Primitive integer polynomial with positive leading coefficient equal to
/// the given rational polynomial up to a positive rational factor.
inline ZPoly qp_to_primitive_zp(const QPoly& p) {
    if (p.empty()) return {};
    Int l = 1;
    for (const auto& c : p) l = l / gcd(l, den(c)) * den(c);
    ZPoly z(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) z[i] = num(p[i]) * (l / den(p[i]));
    Int c = zp_content(z);
    if (z.back() < 0) c = -c;
    for (auto& v : z) v /= c;
    return z;
}

/// Square-free part over Q, returned as a primitive integer polynomial.
inline ZPoly zp_squarefree_part(const ZPoly& p) {
    if (p.empty() || p.size() == 1) return p;
    QPoly q = qp_from_zp(p);
    QPoly g = qp_gcd(q, qp_derivative(q));
    if (qp_degree(g) <= 0) {
        ZPoly r = p;
        Int c = zp_content(r);
        if (r.back() < 0) c = -c;
        return zp_scale_down(r, c);
    }
    return qp_to_primitive_zp(qp_quotient(q, g));
}

}  // namespace concordia
