// Grid solver for the factorization sigma(w^k) = g(w^b) - g(w^a) on the
// rational grid (1/p)Z/Z.
//
// Substituting x = abar y into sigma(k x) = g(b x) - g(a x) gives the
// recurrence g(y/p) = g(b abar y/p) - sigma(k abar y/p).  Multiplication by
// the unit u = b abar decomposes Z/p into orbits; walking an orbit
// telescopes the recurrence, so a solution exists on the orbit of y exactly
// when the cycle sum
//     sum_{j=0}^{r-1} sigma(k abar u^j y / p)
// vanishes.  That sum is the reported violation certificate (it is a Cooper
// orbit sum up to reindexing).  On success one g-value per orbit is free;
// the canonical gauge fixes each orbit representative to 0.
#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "concordia/errors.hpp"
#include "concordia/numeric.hpp"
#include "concordia/sigfn.hpp"

namespace concordia {

/// g restricted to the grid (1/p)Z/Z: one rational per residue, plus the
/// orbit representatives whose values were gauge-fixed to zero.
struct OrbitSolution {
    std::int64_t p = 1;
    std::vector<Rational> values;         // index = residue
    std::vector<std::int64_t> free_reps;  // smallest element of each orbit
};

struct OrbitViolation {
    std::vector<std::int64_t> orbit;  // walked from its smallest element
    Rational sum;                     // exact nonzero cycle sum
};

using SolveResult = std::variant<OrbitSolution, OrbitViolation>;

inline void require_grid_coprime(std::int64_t a, std::int64_t b, std::int64_t k, std::int64_t p) {
    if (p < 1) throw NotCoprime("modulus must be positive");
    if (gcd_i64(a, p) != 1 || gcd_i64(b, p) != 1 || gcd_i64(k, p) != 1)
        throw NotCoprime("solve_g requires gcd(p, abk) = 1; got a=" + std::to_string(a) +
                         " b=" + std::to_string(b) + " k=" + std::to_string(k) +
                         " p=" + std::to_string(p));
}

inline SolveResult solve_g(const SignatureFunction& sigma, std::int64_t a, std::int64_t b,
                           std::int64_t k, std::int64_t p) {
    if (a == b) throw std::invalid_argument("solve_g requires a != b");
    require_grid_coprime(a, b, k, p);
    const std::int64_t abar = mod_inverse(a, p);
    const std::int64_t kabar = mod_pos(k * abar, p);
    const std::int64_t u = mod_pos(b * abar, p);

    OrbitSolution sol;
    sol.p = p;
    sol.values.assign(p, Rational(0));
    std::vector<bool> seen(p, false);

    for (std::int64_t y0 = 0; y0 < p; ++y0) {
        if (seen[y0]) continue;
        std::vector<std::int64_t> orbit;
        Rational cycle_sum = 0;
        std::int64_t y = y0;
        do {
            orbit.push_back(y);
            seen[y] = true;
            cycle_sum += sigma.eval(UnitAngle(mod_pos(kabar * y, p), p), Side::averaged);
            y = mod_pos(u * y, p);
        } while (y != y0);
        if (cycle_sum != 0) return OrbitViolation{std::move(orbit), std::move(cycle_sum)};

        sol.free_reps.push_back(y0);
        Rational acc = 0;  // g(y0) = 0 gauge
        for (std::size_t j = 0; j + 1 < orbit.size(); ++j) {
            acc += sigma.eval(UnitAngle(mod_pos(kabar * orbit[j], p), p), Side::averaged);
            sol.values[orbit[j + 1]] = acc;
        }
    }
    return sol;
}

/// Independent recheck of sigma(k x) = g(b x) - g(a x) over every residue;
/// returns the first failing residue, if any.
inline std::optional<std::int64_t> verify_g(const SignatureFunction& sigma,
                                            const OrbitSolution& g, std::int64_t a,
                                            std::int64_t b, std::int64_t k, std::int64_t p) {
    require_grid_coprime(a, b, k, p);
    for (std::int64_t x = 0; x < p; ++x) {
        Rational lhs = sigma.eval(UnitAngle(mod_pos(k * x, p), p), Side::averaged);
        Rational rhs = g.values[mod_pos(b * x, p)] - g.values[mod_pos(a * x, p)];
        if (lhs != rhs) return x;
    }
    return std::nullopt;
}

}  // namespace concordia
