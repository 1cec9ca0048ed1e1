// Shared test helpers: seeded generators and the independent rational
// linear-solve oracle for the grid factorization.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "concordia/concordia.hpp"

namespace testutil {

using namespace concordia;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::int64_t pick(std::mt19937_64& r, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(r);
}

inline LaurentPoly random_poly(std::mt19937_64& r, int degree, std::int64_t coeff_bound,
                               bool nonzero_constant = true) {
    LaurentPoly p;
    for (int e = 0; e <= degree; ++e) {
        std::int64_t c = pick(r, -coeff_bound, coeff_bound);
        if (e == 0 && nonzero_constant && c == 0) c = 1;
        if (e == degree && c == 0) c = 1;
        p.add_term(e, c);
    }
    return p;
}

inline RationalStepFn random_step_fn(std::mt19937_64& r, int max_jumps, std::int64_t max_den) {
    std::vector<std::pair<UnitAngle, Rational>> jumps;
    int n = static_cast<int>(pick(r, 0, max_jumps));
    for (int i = 0; i < n; ++i) {
        std::int64_t d = pick(r, 2, max_den);
        std::int64_t a = pick(r, 0, d - 1);
        Rational amount(pick(r, -4, 4), pick(r, 1, 2));
        bool dup = false;
        for (auto& [ang, _] : jumps)
            if (ang == UnitAngle(a, d)) dup = true;
        if (!dup && amount != 0) jumps.emplace_back(UnitAngle(a, d), amount);
    }
    return RationalStepFn::from_jumps(std::move(jumps), Rational(pick(r, -2, 2)));
}

inline UnitAngle random_angle(std::mt19937_64& r, std::int64_t max_den) {
    std::int64_t d = pick(r, 1, max_den);
    return UnitAngle(pick(r, 0, d - 1), d);
}

/// Independent feasibility oracle for sigma(k x) = g(b x) - g(a x) on the
/// grid (1/p)Z/Z: dense rational Gaussian elimination on the full system,
/// with no shared code with solve_g.
inline bool grid_system_feasible(const SignatureFunction& sigma, std::int64_t a, std::int64_t b,
                                 std::int64_t k, std::int64_t p) {
    const std::size_t n = static_cast<std::size_t>(p);
    std::vector<std::vector<Rational>> rows;
    for (std::int64_t x = 0; x < p; ++x) {
        std::vector<Rational> row(n + 1, Rational(0));
        row[static_cast<std::size_t>(mod_pos(b * x, p))] += 1;
        row[static_cast<std::size_t>(mod_pos(a * x, p))] -= 1;
        row[n] = sigma.eval(UnitAngle(mod_pos(k * x, p), p), Side::averaged);
        rows.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rational f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j <= n; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    for (std::size_t i = rank; i < rows.size(); ++i)
        if (rows[i][n] != 0) return false;
    // rows below rank have zero coefficients; any nonzero rhs is a contradiction
    for (const auto& row : rows) {
        bool all_zero = true;
        for (std::size_t j = 0; j < n; ++j) all_zero = all_zero && row[j] == 0;
        if (all_zero && row[n] != 0) return false;
    }
    return true;
}

}  // namespace testutil
