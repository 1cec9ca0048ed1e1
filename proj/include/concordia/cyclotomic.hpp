// Cyclotomic polynomials and the exact test for whether e^{2 pi i c/p} is a
// root of an integer polynomial.
#pragma once

#include <cstdint>
#include <map>
#include <mutex>

#include "concordia/dense_poly.hpp"
#include "concordia/numeric.hpp"

namespace concordia {

/// p-th cyclotomic polynomial, computed by dividing t^p - 1 by the
/// cyclotomic polynomials of the proper divisors of p.  Memoized.
inline const ZPoly& cyclotomic_poly(std::int64_t p) {
    static std::map<std::int64_t, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    auto it = cache.find(p);
    if (it != cache.end()) return it->second;

    // compute iteratively over divisors so recursion depth stays shallow
    for (std::int64_t d = 1; d <= p; ++d) {
        if (p % d != 0 || cache.count(d)) continue;
        ZPoly numerator(static_cast<std::size_t>(d) + 1, Int(0));
        numerator[0] = -1;
        numerator[static_cast<std::size_t>(d)] = 1;
        ZPoly acc = numerator;
        for (std::int64_t e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            acc = *zp_divide_exact(acc, cache.at(e));
        }
        cache.emplace(d, std::move(acc));
    }
    return cache.at(p);
}

/// Whether the primitive p-th root of unity e^{2 pi i c/p} (gcd(c,p)=1) is a
/// root of the integer polynomial.  Exact: equivalent to Phi_p dividing it.
/// Galois conjugacy makes the answer independent of c.
inline bool vanishes_at_primitive_root(const ZPoly& poly, std::int64_t p) {
    if (poly.empty()) return true;
    if (zp_degree(poly) < 1) return false;
    if (eulers_phi(p) > zp_degree(poly)) return false;
    return zp_divide_exact(poly, cyclotomic_poly(p)).has_value();
}

}  // namespace concordia
