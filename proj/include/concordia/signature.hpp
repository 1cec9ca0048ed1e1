// The Levine-Tristram signature function of a Seifert matrix, evaluated
// exactly at rational angles.
//
// Jump candidates are the unit-circle roots of the Alexander polynomial.
// They are located exactly: the cosine substitution turns the symmetric
// Alexander representative into an integer polynomial in z = 2 cos(2 pi
// theta) whose roots in (-2, 2) are isolated by Sturm bisection.  Whether a
// rational query angle c/p hits a root is decided by cyclotomic
// divisibility.  Step values on the certified jump-free arcs come from the
// precision-laddered eigenvalue counts in jacobi.hpp, evaluated at rational
// z separators strictly between consecutive root enclosures.
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "concordia/angles.hpp"
#include "concordia/cyclotomic.hpp"
#include "concordia/jacobi.hpp"
#include "concordia/kronecker.hpp"
#include "concordia/root_isolation.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

/// One unit-circle root pair of the Alexander polynomial: the square-free
/// z-polynomial, a rational isolating interval in (-2, 2) holding exactly
/// one of its roots, and a derived rational enclosure of theta in turns.
struct JumpLocus {
    ZPoly zpoly;
    Rational z_lo, z_hi;
    Rational theta_lo, theta_hi;
};

template <typename Real>
struct HermitianMatrix {
    std::vector<std::vector<Real>> re, im;
};

/// (1-w)S + (1-w^-1)S^T at w = e^{2 pi i theta}, split into real and
/// imaginary parts (numeric; exact at theta = 0, 1/2 where w = +-1).
template <typename Real = Float128>
HermitianMatrix<Real> hermitian_at(const SeifertMatrix& S, const UnitAngle& theta) {
    const std::size_t n = S.size();
    HermitianMatrix<Real> H;
    H.re.assign(n, std::vector<Real>(n, Real(0)));
    H.im.assign(n, std::vector<Real>(n, Real(0)));
    Real ang = 2 * boost::math::constants::pi<Real>() * detail::rational_to<Real>(theta.turns());
    Real c = theta.is_zero() ? Real(1) : (theta.turns() == Rational(1, 2) ? Real(-1) : Real(cos(ang)));
    Real s = (theta.is_zero() || theta.turns() == Rational(1, 2)) ? Real(0) : Real(sin(ang));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Real sij(S.entries()(i, j)), sji(S.entries()(j, i));
            H.re[i][j] = (1 - c) * (sij + sji);
            H.im[i][j] = -s * (sij - sji);
        }
    return H;
}

namespace detail {

// 2 cos(2 pi c/p) is rational exactly for these denominators (Niven).
inline std::optional<Rational> rational_2cos(std::int64_t p) {
    switch (p) {
        case 1: return Rational(2);
        case 2: return Rational(-2);
        case 3: return Rational(-1);
        case 4: return Rational(0);
        case 6: return Rational(1);
        default: return std::nullopt;
    }
}

template <typename Real>
int sign_with_margin(const Real& diff, int margin_log2) {
    Real m = ldexp(Real(1), margin_log2);
    if (diff > m) return 1;
    if (diff < -m) return -1;
    return 0;
}

inline int compare_2cos(const UnitAngle& theta, const Rational& r) {
    if (auto z = rational_2cos(static_cast<std::int64_t>(theta.denominator()))) {
        if (*z < r) return -1;
        if (*z > r) return 1;
        return 0;
    }
    {
        Float128 v = 2 * cos(2 * boost::math::constants::pi<Float128>() *
                             rational_to<Float128>(theta.turns()));
        if (int s = sign_with_margin(Float128(v - rational_to<Float128>(r)), -100)) return s;
    }
    {
        Float256 v = 2 * cos(2 * boost::math::constants::pi<Float256>() *
                             rational_to<Float256>(theta.turns()));
        if (int s = sign_with_margin(Float256(v - rational_to<Float256>(r)), -220)) return s;
    }
    Float512 v = 2 * cos(2 * boost::math::constants::pi<Float512>() *
                         rational_to<Float512>(theta.turns()));
    if (int s = sign_with_margin(Float512(v - rational_to<Float512>(r)), -490)) return s;
    throw std::logic_error("compare_2cos: could not separate 2cos(2 pi " + theta.str() +
                           ") from " + to_string(r));
}

// Outward-rounded rational enclosure of acos(z/2)/(2 pi) over a z-interval,
// on a 1e-9 grid (coarse enough to absorb the float error by a wide margin,
// fine enough to separate any desk-scale jump angles).
inline std::pair<Rational, Rational> turns_enclosure(const Rational& z_lo, const Rational& z_hi) {
    using R = Float256;
    const Int grid = 1000000000;
    auto turns_of = [](const Rational& z) {
        R x = rational_to<R>(z) / 2;
        if (x > 1) x = 1;
        if (x < -1) x = -1;
        return acos(x) / (2 * boost::math::constants::pi<R>());
    };
    auto to_rat = [&](const R& x, bool up) {
        Int f = floor(x * R(grid)).convert_to<Int>();
        if (up) ++f;
        return Rational(f, grid);
    };
    Rational lo = to_rat(turns_of(z_hi), false);
    Rational hi = to_rat(turns_of(z_lo), true);
    if (lo < 0) lo = 0;
    if (hi > Rational(1, 2)) hi = Rational(1, 2);
    return {lo, hi};
}

}  // namespace detail

/// Isolates every unit-circle root pair of the Alexander polynomial of S as
/// a JumpLocus, ordered by increasing theta.  These are the only angles
/// where the signature can jump (some may carry a zero jump).
inline std::vector<JumpLocus> jump_loci(const SeifertMatrix& S) {
    std::vector<JumpLocus> out;
    LaurentPoly delta = alexander(S).rep();
    if (delta.span() == 0) return out;
    ZPoly zq = cos_substitute(delta);
    ZPoly zsf = zp_squarefree_part(zq);
    auto ivs = isolate_roots(zsf, Rational(-2), Rational(2));
    // theta ascending = z descending
    std::reverse(ivs.begin(), ivs.end());
    for (auto& iv : ivs) {
        // keep enclosures strictly inside (-2, 2) so separators exist, and
        // tight enough that the derived turns enclosures are informative
        for (int guard = 0; iv.hi >= 2 || iv.lo <= -2 || iv.hi - iv.lo > Rational(1, 1024);
             ++guard) {
            refine_interval(zsf, iv);
            if (guard > 4096) throw std::logic_error("jump_loci: refinement stalled");
        }
        auto [tlo, thi] = detail::turns_enclosure(iv.lo, iv.hi);
        out.push_back({zsf, iv.lo, iv.hi, tlo, thi});
    }
    return out;
}

/// Step-function form of the signature on (0, 1/2], with certified jump
/// angles; the other half circle follows from sigma(theta) = sigma(1-theta).
class SignatureProfile {
public:
    SignatureProfile(const SeifertMatrix& S, SignatureOptions opts = {})
        : matrix_(S), engine_(opts) {
        delta_ = zp_from_canonical(alexander(S).rep());
        candidates_ = jump_loci(S);
        const std::size_t m = candidates_.size();

        // rational z separators strictly between consecutive root enclosures
        zsep_.resize(m + 1);
        for (std::size_t i = 0; i < m; ++i) {
            if (i == 0) {
                zsep_[0] = (candidates_[0].z_hi + 2) / 2;
            } else {
                const Rational& above = candidates_[i - 1].z_lo;  // larger z
                const Rational& below = candidates_[i].z_hi;
                zsep_[i] = below < above ? (above + below) / 2 : above;
            }
        }
        zsep_[m] = Rational(-2);
        if (m == 0) zsep_[0] = Rational(-2);

        steps_.resize(m + 1);
        for (std::size_t i = 0; i <= m; ++i)
            steps_[i] = S.size() == 0 ? 0 : engine_.at_z(S, zsep_[i]);
        if (steps_[0] != 0)
            throw std::logic_error("signature profile: nonzero value adjacent to theta = 0");

        for (std::size_t i = 0; i < m; ++i) {
            int j = steps_[i + 1] - steps_[i];
            if (j != 0) {
                loci_.push_back(candidates_[i]);
                jumps_.push_back(j);
            }
        }
    }

    /// Jump loci with nonzero jump, theta ascending in (0, 1/2].
    const std::vector<JumpLocus>& loci() const { return loci_; }
    /// Signed jump amounts matching loci().
    const std::vector<int>& jumps() const { return jumps_; }
    /// All unit-circle Alexander roots, including zero-jump ones.
    const std::vector<JumpLocus>& candidates() const { return candidates_; }
    const std::vector<int>& step_values() const { return steps_; }
    const SeifertMatrix& matrix() const { return matrix_; }

    /// Evaluates the signature with side control; averaged values at jump
    /// angles are half-integers.
    Rational evaluate(const UnitAngle& theta, Side side = Side::averaged) {
        if (matrix_.size() == 0 || theta.is_zero()) return 0;
        Rational t = theta.turns();
        Side s = side;
        if (t > Rational(1, 2)) {
            t = Rational(1) - t;
            s = flip(s);
        }
        if (t == Rational(1, 2)) return steps_.back();
        UnitAngle th(t);
        const std::int64_t p = static_cast<std::int64_t>(th.denominator());
        if (!vanishes_at_primitive_root(delta_, p)) {
            std::size_t arc = arc_index(th);
            return steps_[arc];
        }
        std::size_t k = candidate_index(th);
        switch (s) {
            case Side::left: return steps_[k];
            case Side::right: return steps_[k + 1];
            default: return Rational(steps_[k] + steps_[k + 1], 2);
        }
    }

private:
    // Index of the arc containing a certified non-jump angle.
    std::size_t arc_index(const UnitAngle& th) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < candidates_.size(); ++i) {
            if (root_below_theta(i, th))
                ++count;
            else
                break;
        }
        return count;
    }

    // Index of the candidate whose root equals 2cos(2 pi theta); theta is
    // known to be a jump angle, so exactly one interval keeps its root.
    std::size_t candidate_index(const UnitAngle& th) {
        for (std::size_t i = 0; i < candidates_.size(); ++i) {
            auto& c = candidates_[i];
            int lo_cmp = detail::compare_2cos(th, c.z_lo);
            int hi_cmp = detail::compare_2cos(th, c.z_hi);
            if (lo_cmp > 0 && hi_cmp < 0) return i;
        }
        throw std::logic_error("signature profile: jump angle not covered by any locus");
    }

    // Whether candidate i's root lies at smaller theta (larger z) than th,
    // refining the enclosure until the question is certified.
    bool root_below_theta(std::size_t i, const UnitAngle& th) {
        auto& c = candidates_[i];
        for (int guard = 0;; ++guard) {
            // z decreases as theta increases: root > z*  <=>  theta_root < theta
            if (detail::compare_2cos(th, c.z_hi) >= 0) return false;
            if (detail::compare_2cos(th, c.z_lo) <= 0) return true;
            IsolatingInterval iv{c.z_lo, c.z_hi};
            refine_interval(c.zpoly, iv);
            c.z_lo = iv.lo;
            c.z_hi = iv.hi;
            if (guard > 20000)
                throw std::logic_error("signature profile: interval refinement stalled");
        }
    }

    SeifertMatrix matrix_;
    CertifiedSignature engine_;
    ZPoly delta_;
    std::vector<JumpLocus> candidates_;
    std::vector<Rational> zsep_;
    std::vector<int> steps_;
    std::vector<JumpLocus> loci_;
    std::vector<int> jumps_;
};

inline SignatureProfile profile_of(const SeifertMatrix& S, SignatureOptions opts = {}) {
    return SignatureProfile(S, opts);
}

/// Averaged Levine-Tristram signature at a rational angle: the even-integer
/// eigenvalue count away from Alexander roots, the mean of the one-sided
/// step values at them.
inline Rational signature_at(const SeifertMatrix& S, const UnitAngle& theta,
                             SignatureOptions opts = {}) {
    if (S.size() == 0 || theta.is_zero()) return 0;
    const std::int64_t p = static_cast<std::int64_t>(theta.denominator());
    ZPoly delta = zp_from_canonical(alexander(S).rep());
    if (!vanishes_at_primitive_root(delta, p))
        return CertifiedSignature(opts).at_turns(S, theta.turns());
    SignatureProfile prof(S, opts);
    return prof.evaluate(theta, Side::averaged);
}

}  // namespace concordia
