// Certified signature counting for the Hermitian forms (1-w)S + (1-w^-1)S^T.
//
// The Hermitian matrix H = A + iB (A symmetric, B antisymmetric, both real)
// is embedded as the real symmetric [[A, -B], [B, A]], whose spectrum is that
// of H doubled.  Eigenvalues come from a cyclic Jacobi iteration run over
// multiprecision binary floats; a result only counts when the smallest
// eigenvalue modulus clears a relative tolerance and the resulting signature
// has the right parity and bound.  On failure the computation is retried up
// the precision ladder before EigenvalueTooClose surfaces.
#pragma once

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstdint>
#include <optional>
#include <vector>

#include "concordia/errors.hpp"
#include "concordia/numeric.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

using Float128 = boost::multiprecision::cpp_bin_float_quad;
using Float256 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<71>>;
using Float512 = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<154>>;

struct SignatureOptions {
    unsigned precision_bits = 128;        // starting rung of the ladder
    int zero_tolerance_log2 = -40;        // relative "eigenvalue is zero" threshold
};

namespace detail {

template <typename Real>
Real rational_to(const Rational& r) {
    return Real(num(r)) / Real(den(r));
}

template <typename Real>
std::vector<Real> jacobi_eigenvalues(std::vector<std::vector<Real>> a) {
    const std::size_t n = a.size();
    if (n == 0) return {};
    const Real eps = std::numeric_limits<Real>::epsilon();
    for (int sweep = 0; sweep < 60; ++sweep) {
        Real off = 0, scale = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) off += a[i][j] * a[i][j];
                scale += a[i][j] * a[i][j];
            }
        if (off <= eps * eps * scale * 16) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0) continue;
                Real theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                Real t = (theta >= 0 ? Real(1) : Real(-1)) /
                         (abs(theta) + sqrt(theta * theta + 1));
                Real c = 1 / sqrt(t * t + 1);
                Real s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    Real akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    Real apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<Real> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    return ev;
}

// Signature of A + iB with certification; nullopt requests escalation.
// max_abs_sig bounds |signature| (2g); gap_out reports the smallest modulus.
template <typename Real>
std::optional<int> hermitian_signature(const std::vector<std::vector<Real>>& A,
                                       const std::vector<std::vector<Real>>& B,
                                       int zero_tol_log2, int max_abs_sig, Real* gap_out) {
    const std::size_t n = A.size();
    if (n == 0) return 0;
    std::vector<std::vector<Real>> M(2 * n, std::vector<Real>(2 * n, Real(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            M[i][j] = A[i][j];
            M[n + i][n + j] = A[i][j];
            M[i][n + j] = -B[i][j];
            M[n + i][j] = B[i][j];
        }
    auto ev = jacobi_eigenvalues(std::move(M));
    Real min_abs = abs(ev[0]), max_abs = Real(1);
    for (const auto& v : ev) {
        if (abs(v) < min_abs) min_abs = abs(v);
        if (abs(v) > max_abs) max_abs = abs(v);
    }
    if (gap_out) *gap_out = min_abs;
    Real tol = ldexp(max_abs, zero_tol_log2);
    if (min_abs <= tol) return std::nullopt;
    int pos = 0, neg = 0;
    for (const auto& v : ev) (v > 0 ? pos : neg)++;
    int doubled = pos - neg;
    if (doubled % 2 != 0) return std::nullopt;
    int sig = doubled / 2;
    if (sig % 2 != 0 || sig > max_abs_sig || sig < -max_abs_sig) return std::nullopt;
    return sig;
}

// Builds A = (1-cos)(S+S^T), B = -sin (S-S^T) and runs the certified count.
template <typename Real>
std::optional<int> signature_with(const SeifertMatrix& S, const Real& cos_v, const Real& sin_v,
                                  int zero_tol_log2, Real* gap_out) {
    const std::size_t n = S.size();
    std::vector<std::vector<Real>> A(n, std::vector<Real>(n)), B(n, std::vector<Real>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Real sij(S.entries()(i, j));
            Real sji(S.entries()(j, i));
            A[i][j] = (1 - cos_v) * (sij + sji);
            B[i][j] = -sin_v * (sij - sji);
        }
    return hermitian_signature(A, B, zero_tol_log2, static_cast<int>(n), gap_out);
}

template <typename Real>
std::optional<int> signature_at_turns(const SeifertMatrix& S, const Rational& turns,
                                      int zero_tol_log2, Real* gap_out) {
    Real two_pi_theta = 2 * boost::math::constants::pi<Real>() * rational_to<Real>(turns);
    return signature_with(S, Real(cos(two_pi_theta)), Real(sin(two_pi_theta)), zero_tol_log2,
                          gap_out);
}

// z = 2 cos(angle) rational, sin taken positive (angle in (0, 1/2) turns).
template <typename Real>
std::optional<int> signature_at_z(const SeifertMatrix& S, const Rational& z, int zero_tol_log2,
                                  Real* gap_out) {
    Real c = rational_to<Real>(z) / 2;
    Real s = sqrt(Real(1) - c * c);
    return signature_with(S, c, s, zero_tol_log2, gap_out);
}

}  // namespace detail

/// Certified signature at a point given in turns or as z = 2 cos(2 pi theta),
/// escalating through 128/256/512-bit floats.  Throws EigenvalueTooClose when
/// even the top rung cannot separate an eigenvalue from zero.
class CertifiedSignature {
public:
    explicit CertifiedSignature(SignatureOptions opts = {}) : opts_(opts) {}

    int at_turns(const SeifertMatrix& S, const Rational& turns) const {
        return run([&](auto tag, auto* gap) {
            using Real = decltype(tag);
            return detail::signature_at_turns<Real>(S, turns, opts_.zero_tolerance_log2, gap);
        }, "theta = " + concordia::to_string(turns));
    }

    int at_z(const SeifertMatrix& S, const Rational& z) const {
        return run([&](auto tag, auto* gap) {
            using Real = decltype(tag);
            return detail::signature_at_z<Real>(S, z, opts_.zero_tolerance_log2, gap);
        }, "z = " + concordia::to_string(z));
    }

private:
    template <typename F>
    int run(F&& f, const std::string& where) const {
        std::string gap_str = "?";
        if (opts_.precision_bits <= 128) {
            Float128 gap = 0;
            if (auto s = f(Float128(), &gap)) return *s;
            gap_str = gap.str(6);
        }
        if (opts_.precision_bits <= 256) {
            Float256 gap = 0;
            if (auto s = f(Float256(), &gap)) return *s;
            gap_str = gap.str(6);
        }
        Float512 gap = 0;
        if (auto s = f(Float512(), &gap)) return *s;
        throw EigenvalueTooClose(where, gap.str(6));
    }

    SignatureOptions opts_;
};

}  // namespace concordia
