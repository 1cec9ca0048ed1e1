// Integer-coefficient Laurent polynomials and the unit-equivalence class
// (equality up to multiplication by +-t^j) they generate.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "concordia/errors.hpp"
#include "concordia/numeric.hpp"

namespace concordia {

/// Finitely supported map exponent -> coefficient.  Zero coefficients are
/// never stored; the zero polynomial is the empty map.
class LaurentPoly {
public:
    using Map = std::map<std::int64_t, Int>;

    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<std::int64_t, Int>> terms) {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    static LaurentPoly monomial(const Int& coeff, std::int64_t exp) {
        LaurentPoly p;
        p.add_term(exp, coeff);
        return p;
    }
    static LaurentPoly constant(const Int& c) { return monomial(c, 0); }
    static LaurentPoly t() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    const Map& terms() const { return coeffs_; }

    Int coeff(std::int64_t exp) const {
        auto it = coeffs_.find(exp);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    std::int64_t lowest_exponent() const { return coeffs_.begin()->first; }
    std::int64_t highest_exponent() const { return coeffs_.rbegin()->first; }

    /// Degree of the canonical ordinary-polynomial representative.
    std::int64_t span() const {
        return is_zero() ? 0 : highest_exponent() - lowest_exponent();
    }

    void add_term(std::int64_t exp, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
        return r;
    }
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.coeffs_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    friend LaurentPoly operator*(const Int& s, const LaurentPoly& a) {
        LaurentPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_.emplace(e, s * c);
        return r;
    }

    LaurentPoly shifted(std::int64_t j) const {
        LaurentPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + j, c);
        return r;
    }

    bool operator==(const LaurentPoly& o) const = default;

    /// Evaluation at a nonzero rational point.
    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (const auto& [e, c] : coeffs_) {
            Rational p = 1;
            std::int64_t k = e < 0 ? -e : e;
            Rational base = e < 0 ? Rational(den(x), num(x)) : x;
            for (std::int64_t i = 0; i < k; ++i) p *= base;
            acc += Rational(c) * p;
        }
        return acc;
    }

    /// Serialized form: "coeff:exponent" pairs sorted by exponent.
    std::string serialize() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            if (!first) os << ' ';
            os << c.str() << ':' << e;
            first = false;
        }
        return os.str();
    }

    static LaurentPoly parse(const std::string& text) {
        LaurentPoly p;
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) {
            auto colon = tok.find(':');
            if (colon == std::string::npos)
                throw ParseError("expected coeff:exponent, got '" + tok + "'");
            Int c;
            std::int64_t e;
            try {
                c = Int(tok.substr(0, colon));
                e = std::stoll(tok.substr(colon + 1));
            } catch (const std::exception&) {
                throw ParseError("cannot parse term '" + tok + "'");
            }
            if (p.coeffs_.count(e)) throw ParseError("duplicate exponent " + std::to_string(e));
            p.add_term(e, c);
        }
        return p;
    }

    /// Human-readable rendering, highest exponent first.
    std::string display() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [e, c] = *it;
            Int a = c;
            if (first) {
                if (a < 0) { os << '-'; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                os << 't';
                if (e != 1) os << '^' << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    Map coeffs_;
};

/// The t -> 1/t involution.
inline LaurentPoly conjugate(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
    return r;
}

/// Equivalence class of Laurent polynomials under multiplication by +-t^j,
/// held by its canonical representative (lowest exponent 0, positive
/// leading coefficient).
class AssocClass {
public:
    AssocClass() = default;
    explicit AssocClass(const LaurentPoly& p) : rep_(canonicalize(p)) {}

    const LaurentPoly& rep() const { return rep_; }
    bool operator==(const AssocClass& o) const = default;

    friend AssocClass operator*(const AssocClass& a, const AssocClass& b) {
        return AssocClass(a.rep_ * b.rep_);
    }

    static LaurentPoly canonicalize(const LaurentPoly& p) {
        if (p.is_zero()) return p;
        LaurentPoly q = p.shifted(-p.lowest_exponent());
        if (q.terms().rbegin()->second < 0) q = -q;
        return q;
    }

private:
    LaurentPoly rep_;
};

inline AssocClass normalize_assoc(const LaurentPoly& p) { return AssocClass(p); }

}  // namespace concordia
