// Rational points of the unit circle, measured in turns.
#pragma once

#include <cstdint>
#include <string>

#include "concordia/numeric.hpp"

namespace concordia {

enum class Side { left, right, averaged };

/// Angle theta in [0, 1) turns, representing w = e^{2 pi i theta}; kept as a
/// reduced fraction.
class UnitAngle {
public:
    UnitAngle() : turns_(0) {}
    explicit UnitAngle(Rational turns) : turns_(reduce_mod1(std::move(turns))) {}
    UnitAngle(std::int64_t n, std::int64_t d) : UnitAngle(Rational(n, d)) {}

    const Rational& turns() const { return turns_; }
    Int numerator() const { return num(turns_); }
    Int denominator() const { return den(turns_); }

    bool is_zero() const { return turns_ == 0; }

    /// k * theta mod 1 (cable transport of angles).
    UnitAngle times(std::int64_t k) const { return UnitAngle(Rational(k) * turns_); }

    /// 1 - theta mod 1 (complex conjugation).
    UnitAngle reflected() const { return UnitAngle(Rational(1) - turns_); }

    bool operator==(const UnitAngle& o) const = default;
    bool operator<(const UnitAngle& o) const { return turns_ < o.turns_; }

    std::string str() const { return concordia::to_string(turns_); }

    static Rational reduce_mod1(Rational r) {
        Int n = num(r), d = den(r);
        Int q = n / d;
        if (n % d != 0 && n < 0) --q;
        return r - Rational(q);
    }

private:
    Rational turns_;
};

inline Side flip(Side s) {
    if (s == Side::left) return Side::right;
    if (s == Side::right) return Side::left;
    return Side::averaged;
}

}  // namespace concordia
