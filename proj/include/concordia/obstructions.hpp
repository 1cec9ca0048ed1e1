// Composite obstruction pipelines: the Cooper test on derivatives of
// genus-one knots, the doubling-operator signature test, and the
// signature-level verification of the sufficiency hypothesis.
#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "concordia/cooper.hpp"
#include "concordia/errors.hpp"
#include "concordia/kronecker.hpp"
#include "concordia/signature.hpp"
#include "concordia/sigfn.hpp"

namespace concordia {

enum class Verdict { pass, bounded_pass, violated, inapplicable };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::bounded_pass: return "bounded-pass";
        case Verdict::violated: return "violated";
        default: return "inapplicable";
    }
}

struct ObstructionReport {
    Verdict verdict = Verdict::bounded_pass;
    std::vector<CooperViolation> violations;  // nonempty iff verdict == violated (cooper tests)
    std::vector<std::pair<UnitAngle, Rational>> nonzero_samples;  // doubling test evidence
    std::string parameters;
    std::string summary;
};

/// Cooper test for "J is a derivative of a 1.5-solvable genus-one K with
/// Delta_K = (mt-(m+1))((m+1)t-m)": scans the (m, m+1)-signature condition.
/// Empty scan = consistent (bounded); any violation rules J out.
inline ObstructionReport derivative_obstruction(std::int64_t m, const SignatureFunction& sigma_j,
                                                std::int64_t p_max, std::int64_t c_max) {
    if (m == 0 || m == -1) throw BadM(m);
    ObstructionReport rep;
    {
        std::ostringstream os;
        os << "m=" << m << " n=" << m + 1 << " p_max=" << p_max << " c_max=" << c_max;
        rep.parameters = os.str();
    }
    rep.violations = cooper_scan(sigma_j, m, m + 1, p_max, c_max);
    if (rep.violations.empty()) {
        rep.verdict = Verdict::bounded_pass;
        rep.summary = "Cooper (m, m+1)-sums vanish on the scanned grid; consistent with J "
                      "being a derivative of a 1.5-solvable genus-one knot";
    } else {
        rep.verdict = Verdict::violated;
        rep.summary = "nonzero Cooper sum: J cannot be a derivative associated to a "
                      "1.5-solution with this m";
    }
    return rep;
}

/// Doubling-operator test: if every irreducible factor of Delta_R divides
/// some a t^p - b within the bound, the coprimality hypothesis fails and
/// the obstruction does not apply.  Otherwise the obstruction's conclusion
/// (sigma_J identically zero) is sampled; one nonzero value refutes
/// R_eta(J) being 1.5-solvable under the hypotheses.
inline ObstructionReport doubling_obstruction(const LaurentPoly& delta_r,
                                              const SignatureFunction& sigma_j,
                                              std::int64_t p_max_poly, std::int64_t sample_count) {
    if (delta_r.is_zero()) throw std::invalid_argument("doubling_obstruction: zero polynomial");
    ObstructionReport rep;
    {
        std::ostringstream os;
        os << "delta_R=" << delta_r.display() << " p_max_poly=" << p_max_poly
           << " samples=" << sample_count;
        rep.parameters = os.str();
    }

    Factorization f = factor_rational(delta_r);
    std::vector<ZPoly> seen;
    bool some_factor_unannihilated = false;
    for (const auto& g : f.factors) {
        bool dup = false;
        for (const auto& s : seen) dup = dup || s == g;
        if (dup) continue;
        seen.push_back(g);
        if (zp_degree(g) < 1) continue;
        if (!eigen_annihilator(zp_to_laurent(g), p_max_poly)) {
            some_factor_unannihilated = true;
            break;
        }
    }
    if (f.factors.empty() || !some_factor_unannihilated) {
        rep.verdict = Verdict::inapplicable;
        rep.summary = "every irreducible factor of Delta_R divides some a t^p - b within the "
                      "bound; the coprimality hypothesis cannot hold";
        return rep;
    }

    for (std::int64_t j = 1; j <= sample_count; ++j) {
        UnitAngle theta(j, 2 * sample_count + 1);
        Rational v = sigma_j.eval(theta, Side::averaged);
        if (v != 0) rep.nonzero_samples.emplace_back(theta, v);
    }
    if (rep.nonzero_samples.empty()) {
        rep.verdict = Verdict::bounded_pass;
        rep.summary = "signature samples all vanish; consistent with the required conclusion";
    } else {
        rep.verdict = Verdict::violated;
        rep.summary = "sigma_J is not identically zero; R_eta(J) cannot be 1.5-solvable under "
                      "the coprimality hypothesis";
    }
    return rep;
}

/// Matrix overload: when sigma_J comes from a Seifert matrix, vanishing is
/// certified exactly (no unit-circle Alexander roots and one regular value
/// zero) instead of by sampling alone.
inline ObstructionReport doubling_obstruction(const LaurentPoly& delta_r, const SeifertMatrix& J,
                                              std::int64_t p_max_poly, std::int64_t sample_count,
                                              SignatureOptions opts = {}) {
    ObstructionReport rep = doubling_obstruction(delta_r, SignatureFunction::from_matrix(J, opts),
                                                 p_max_poly, sample_count);
    if (rep.verdict == Verdict::bounded_pass) {
        SignatureProfile prof(J, opts);
        if (prof.candidates().empty() && prof.step_values().back() == 0)
            rep.summary += "; vanishing certified exactly (no unit-circle Alexander roots)";
    }
    return rep;
}

struct SufficiencyResult {
    bool pass = true;
    std::optional<UnitAngle> witness;  // first failing sample
    Rational lhs, rhs;                 // values at the witness
};

/// Checks sigma_J(theta) = sigma_T(m theta) - sigma_T((m+1) theta) at each
/// sample; the signature-level part of the sufficiency hypothesis
/// [J] = [T_(m,1)] - [T_(m+1,1)].
inline SufficiencyResult sufficiency_verify(const SignatureFunction& sigma_j,
                                            const SignatureFunction& sigma_t, std::int64_t m,
                                            const std::vector<UnitAngle>& samples) {
    if (m == 0 || m == -1) throw BadM(m);
    for (const auto& theta : samples) {
        Rational lhs = sigma_j.eval(theta, Side::averaged);
        Rational rhs = sigma_t.eval(theta.times(m), Side::averaged) -
                       sigma_t.eval(theta.times(m + 1), Side::averaged);
        if (lhs != rhs) return {false, theta, lhs, rhs};
    }
    return {};
}

}  // namespace concordia
