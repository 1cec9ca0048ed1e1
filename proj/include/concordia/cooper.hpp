// The Cooper (m,n)-signature condition: modular orbit sums of a signature
// function, grid scans, and the telescoping synthesis that produces
// functions satisfying the condition exactly.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "concordia/errors.hpp"
#include "concordia/numeric.hpp"
#include "concordia/sigfn.hpp"

namespace concordia {

/// Least r >= 1 with u^r = 1 mod p.  Requires p >= 2 and gcd(u, p) = 1.
inline std::int64_t mult_order(std::int64_t u, std::int64_t p) {
    if (p < 2) throw NotCoprime("mult_order requires a modulus >= 2");
    if (gcd_i64(u, p) != 1)
        throw NotCoprime(std::to_string(u) + " is not a unit mod " + std::to_string(p));
    std::int64_t x = mod_pos(u, p), r = 1;
    while (x != 1) {
        x = mod_pos(x * u, p);
        ++r;
    }
    return r;
}

struct CooperParams {
    std::int64_t m, n;  // coprime, nonzero
    std::int64_t p;     // modulus, gcd(m,p) = gcd(n,p) = 1
    std::int64_t c;     // residue class, gcd(c,p) = 1

    void check() const {
        if (m == 0 || n == 0) throw NotCoprime("m and n must be nonzero");
        if (p < 1) throw NotCoprime("modulus must be positive");
        if (gcd_i64(m, p) != 1)
            throw NotCoprime("gcd(m, p) != 1 for m=" + std::to_string(m) + " p=" + std::to_string(p));
        if (gcd_i64(n, p) != 1)
            throw NotCoprime("gcd(n, p) != 1 for n=" + std::to_string(n) + " p=" + std::to_string(p));
        if (gcd_i64(c, p) != 1)
            throw NotCoprime("gcd(c, p) != 1 for c=" + std::to_string(c) + " p=" + std::to_string(p));
    }

    /// Order r of n * inverse(m) in (Z/p)^*.
    std::int64_t orbit_length() const {
        if (p == 1) return 1;
        return mult_order(mod_pos(n * mod_inverse(m, p), p), p);
    }
};

/// Sum over l = 1..r of f(e^{2 pi i c (n mbar)^l / p}) with averaged values;
/// r is the order of n*mbar mod p.  Vanishing for all admissible (p, c) is
/// the Cooper (m,n)-signature condition.
inline Rational cooper_sum(const SignatureFunction& f, const CooperParams& params) {
    params.check();
    if (params.p == 1) return f.eval(UnitAngle(0, 1), Side::averaged);
    const std::int64_t p = params.p;
    const std::int64_t u = mod_pos(params.n * mod_inverse(params.m, p), p);
    const std::int64_t r = mult_order(u, p);
    Rational acc = 0;
    std::int64_t power = 1;
    for (std::int64_t l = 1; l <= r; ++l) {
        power = mod_pos(power * u, p);
        acc += f.eval(UnitAngle(mod_pos(params.c * power, p), p), Side::averaged);
    }
    return acc;
}

struct CooperViolation {
    CooperParams params;
    std::int64_t orbit_length;
    Rational sum;
};

/// Scans every admissible (p <= p_max, c <= min(c_max, p-1)) and reports the
/// nonzero sums.  An empty result certifies the condition on the scanned
/// grid only.  Sums are cached per residue so each f(y/p) is evaluated once.
/// Moduli where a synthesized partial function is undefined (p sharing a
/// factor with its k) are skipped rather than decomposed.
inline std::vector<CooperViolation> cooper_scan(const SignatureFunction& f, std::int64_t m,
                                                std::int64_t n, std::int64_t p_max,
                                                std::int64_t c_max) {
    if (m == 0 || n == 0 || gcd_i64(m, n) != 1)
        throw NotCoprime("cooper_scan requires nonzero coprime m, n");
    std::vector<CooperViolation> out;
    for (std::int64_t p = 2; p <= p_max; ++p) {
        if (gcd_i64(m, p) != 1 || gcd_i64(n, p) != 1) continue;
        const std::int64_t u = mod_pos(n * mod_inverse(m, p), p);
        const std::int64_t r = mult_order(u, p);
        std::vector<Rational> value(p);
        std::vector<bool> have(p, false);
        std::vector<CooperViolation> found;
        try {
            for (std::int64_t c = 1; c <= std::min(c_max, p - 1); ++c) {
                if (gcd_i64(c, p) != 1) continue;
                Rational acc = 0;
                std::int64_t power = 1;
                for (std::int64_t l = 1; l <= r; ++l) {
                    power = mod_pos(power * u, p);
                    std::int64_t y = mod_pos(c * power, p);
                    if (!have[y]) {
                        value[y] = f.eval(UnitAngle(y, p), Side::averaged);
                        have[y] = true;
                    }
                    acc += value[y];
                }
                if (acc != 0) found.push_back({CooperParams{m, n, p, c}, r, acc});
            }
        } catch (const DomainError&) {
            continue;  // f undefined on this grid; skip the modulus entirely
        }
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

/// The telescoping synthesis behind the Cooper condition: from a step
/// function g and gcd(a,b) = 1 builds the partial function
/// f(c/p) = g(b kbar c/p) - g(a kbar c/p), defined when gcd(p, k) = 1.
/// Every Cooper (a,b)-sum of f over a grid coprime to a*b*k telescopes to
/// an exact zero.
inline SignatureFunction synth_from_g(const RationalStepFn& g, std::int64_t a, std::int64_t b,
                                      std::int64_t k) {
    if (gcd_i64(a, b) != 1) throw NotCoprime("synth_from_g requires gcd(a, b) = 1");
    if (k < 1) throw DomainError("synth_from_g requires k >= 1");
    return SignatureFunction::synthesized(g, a, b, k);
}

}  // namespace concordia
