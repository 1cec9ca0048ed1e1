// Signature functions as first-class evaluable objects: matrix signatures,
// cables, integer linear combinations, satellites, synthetic step functions,
// and the partial functions synthesized from a step function by the
// telescoping construction.
//
// A SignatureFunction is a small immutable combinator tree evaluated on
// demand.  Cabling transports algebraic jump loci to k-th roots, which would
// explode an eager jump-list representation; the consumers (Cooper sums, the
// grid solver) only ever evaluate at rational angles.
#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "concordia/angles.hpp"
#include "concordia/errors.hpp"
#include "concordia/seifert.hpp"
#include "concordia/signature.hpp"

namespace concordia {

/// Piecewise-constant rational function on [0, 1) turns, described by its
/// jump list and its (averaged) value at 0.
class RationalStepFn {
public:
    struct Jump {
        UnitAngle angle;
        Rational amount;  // nonzero
    };

    RationalStepFn() = default;

    static RationalStepFn from_jumps(std::vector<std::pair<UnitAngle, Rational>> jumps,
                                     Rational base = 0) {
        RationalStepFn f;
        f.base_ = std::move(base);
        std::sort(jumps.begin(), jumps.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& [angle, amount] : jumps) {
            if (amount == 0) continue;
            if (!f.jumps_.empty() && f.jumps_.back().angle == angle)
                throw DuplicateAngle(angle.str());
            f.jumps_.push_back({angle, std::move(amount)});
        }
        return f;
    }

    const std::vector<Jump>& jumps() const { return jumps_; }
    const Rational& base() const { return base_; }

    Rational eval(const UnitAngle& theta, Side side = Side::averaged) const {
        // offset chosen so the averaged value at 0 equals base
        Rational acc = base_;
        if (!jumps_.empty() && jumps_[0].angle.is_zero()) acc -= jumps_[0].amount / 2;
        Rational at_theta = 0;
        for (const auto& j : jumps_) {
            if (j.angle < theta)
                acc += j.amount;
            else if (j.angle == theta)
                at_theta = j.amount;
            else
                break;
        }
        switch (side) {
            case Side::left: return acc;
            case Side::right: return acc + at_theta;
            default: return acc + at_theta / 2;
        }
    }

    RationalStepFn negated() const {
        RationalStepFn f = *this;
        f.base_ = -f.base_;
        for (auto& j : f.jumps_) j.amount = -j.amount;
        return f;
    }

    /// Explicit jump transport under cabling, k >= 1: theta -> k theta pulls
    /// each jump at beta back to the k angles with k alpha = beta mod 1.
    /// When the jumps do not cancel over the circle, the argument wrapping
    /// past 1 at theta = i/k drops the accumulated total, so those angles
    /// acquire jumps of -sum(j).  For circle-honest inputs (cancelling
    /// jumps) this agrees with the lazy cable combinator everywhere,
    /// one-sided values included; otherwise it tracks the true limits, which
    /// at the wrap angles themselves differ from the combinator's formal
    /// side transport.  Negative indices stay with the combinator.
    RationalStepFn cabled(std::int64_t k) const {
        if (k == 0) throw ZeroIndex();
        if (k < 0)
            throw DomainError("explicit jump transport requires k >= 1; use the "
                              "SignatureFunction cable combinator for negative indices");
        std::vector<std::pair<UnitAngle, Rational>> transported;
        Rational total = 0;
        for (const auto& j : jumps_) {
            total += j.amount;
            for (std::int64_t i = 0; i < k; ++i)
                transported.emplace_back(UnitAngle((j.angle.turns() + i) / k), j.amount);
        }
        if (total != 0)
            for (std::int64_t i = 1; i < k; ++i)
                transported.emplace_back(UnitAngle(i, k), -total);
        // collisions between distinct preimages sum
        std::sort(transported.begin(), transported.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::pair<UnitAngle, Rational>> merged;
        for (auto& [angle, amount] : transported) {
            if (!merged.empty() && merged.back().first == angle)
                merged.back().second += amount;
            else
                merged.emplace_back(angle, amount);
        }
        return from_jumps(std::move(merged), base_);
    }

    friend RationalStepFn operator+(const RationalStepFn& a, const RationalStepFn& b) {
        std::vector<std::pair<UnitAngle, Rational>> jumps;
        for (const auto& j : a.jumps_) jumps.emplace_back(j.angle, j.amount);
        for (const auto& j : b.jumps_) {
            bool found = false;
            for (auto& [angle, amount] : jumps)
                if (angle == j.angle) {
                    amount += j.amount;
                    found = true;
                    break;
                }
            if (!found) jumps.emplace_back(j.angle, j.amount);
        }
        return from_jumps(std::move(jumps), a.base_ + b.base_);
    }

private:
    Rational base_ = 0;
    std::vector<Jump> jumps_;
};

enum class SigKind { from_matrix, cable, combination, step, synthesized };

class SignatureFunction {
public:
    /// Constant zero (also what a would-be 0-cable should use).
    SignatureFunction() : node_(std::make_shared<Node>()) {
        node_->kind = SigKind::step;
        node_->step = RationalStepFn();
    }

    static SignatureFunction from_matrix(const SeifertMatrix& S, SignatureOptions opts = {}) {
        auto n = std::make_shared<Node>();
        n->kind = SigKind::from_matrix;
        n->matrix = S;
        n->opts = opts;
        return SignatureFunction(std::move(n));
    }

    static SignatureFunction from_step(RationalStepFn f) {
        auto n = std::make_shared<Node>();
        n->kind = SigKind::step;
        n->step = std::move(f);
        return SignatureFunction(std::move(n));
    }

    /// sigma_{J_(k,1)}(w) = sigma_J(w^k); sides transported by the sign of k.
    SignatureFunction cabled(std::int64_t k) const {
        if (k == 0) throw ZeroIndex();
        auto n = std::make_shared<Node>();
        n->kind = SigKind::cable;
        n->cable_index = k;
        n->children.push_back(*this);
        return SignatureFunction(std::move(n));
    }

    static SignatureFunction linear_combine(
        std::vector<std::pair<std::int64_t, SignatureFunction>> terms) {
        auto n = std::make_shared<Node>();
        n->kind = SigKind::combination;
        for (auto& [c, f] : terms) {
            n->coeffs.push_back(c);
            n->children.push_back(std::move(f));
        }
        return SignatureFunction(std::move(n));
    }

    /// Partial function f(c/p) = g(b kbar c/p) - g(a kbar c/p), defined when
    /// gcd(p, k) = 1; kbar is the inverse of k mod p.
    static SignatureFunction synthesized(RationalStepFn g, std::int64_t a, std::int64_t b,
                                         std::int64_t k) {
        auto n = std::make_shared<Node>();
        n->kind = SigKind::synthesized;
        n->step = std::move(g);
        n->synth_a = a;
        n->synth_b = b;
        n->synth_k = k;
        return SignatureFunction(std::move(n));
    }

    SigKind kind() const { return node_->kind; }

    Rational eval(const UnitAngle& theta, Side side = Side::averaged) const {
        const Node& n = *node_;
        switch (n.kind) {
            case SigKind::from_matrix: {
                std::lock_guard<std::mutex> lock(n.mu);
                if (!n.profile) n.profile.emplace(n.matrix, n.opts);
                return n.profile->evaluate(theta, side);
            }
            case SigKind::cable: {
                Side s = n.cable_index > 0 ? side : flip(side);
                return n.children[0].eval(theta.times(n.cable_index), s);
            }
            case SigKind::combination: {
                Rational acc = 0;
                for (std::size_t i = 0; i < n.children.size(); ++i)
                    acc += Rational(n.coeffs[i]) * n.children[i].eval(theta, side);
                return acc;
            }
            case SigKind::step:
                return n.step.eval(theta, side);
            case SigKind::synthesized: {
                const std::int64_t p = static_cast<std::int64_t>(theta.denominator());
                std::int64_t k = n.synth_k;
                if (gcd_i64(k, p) != 1)
                    throw DomainError("synthesized function undefined at denominator " +
                                      std::to_string(p) + " sharing a factor with k = " +
                                      std::to_string(k));
                std::int64_t kbar = mod_inverse(k, p);
                UnitAngle hi(theta.turns() * Rational(n.synth_b * kbar));
                UnitAngle lo(theta.turns() * Rational(n.synth_a * kbar));
                return n.step.eval(hi, Side::averaged) - n.step.eval(lo, Side::averaged);
            }
        }
        throw std::logic_error("unreachable");
    }

private:
    struct Node {
        SigKind kind = SigKind::step;
        // from_matrix
        SeifertMatrix matrix;
        SignatureOptions opts;
        mutable std::mutex mu;
        mutable std::optional<SignatureProfile> profile;
        // cable / combination
        std::int64_t cable_index = 1;
        std::vector<std::int64_t> coeffs;
        std::vector<SignatureFunction> children;
        // step / synthesized
        RationalStepFn step;
        std::int64_t synth_a = 0, synth_b = 0, synth_k = 1;
    };

    explicit SignatureFunction(std::shared_ptr<Node> n) : node_(std::move(n)) {}

    std::shared_ptr<Node> node_;
};

inline SignatureFunction cable(const SignatureFunction& f, std::int64_t k) { return f.cabled(k); }

inline SignatureFunction linear_combine(
    std::vector<std::pair<std::int64_t, SignatureFunction>> terms) {
    return SignatureFunction::linear_combine(std::move(terms));
}

/// Signature-level satellite with winding number c: sigma_P + sigma_J(w^c).
/// Winding zero contributes sigma_J(1) = 0, so the pattern alone remains.
inline SignatureFunction satellite(const SignatureFunction& sigma_p,
                                   const SignatureFunction& sigma_j, std::int64_t c) {
    if (c == 0) return sigma_p;
    return linear_combine({{1, sigma_p}, {1, sigma_j.cabled(c)}});
}

inline SignatureFunction step_from_jumps(std::vector<std::pair<UnitAngle, Rational>> jumps,
                                         Rational base = 0) {
    return SignatureFunction::from_step(RationalStepFn::from_jumps(std::move(jumps), std::move(base)));
}

}  // namespace concordia
