// Exact integer / rational scalar types and small number-theory helpers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "concordia/errors.hpp"

namespace concordia {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) {
        auto t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Euclidean remainder in [0, m).
inline std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
    auto r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of u mod p, p >= 1.  Throws NotCoprime when gcd(u, p) != 1.
inline std::int64_t mod_inverse(std::int64_t u, std::int64_t p) {
    if (p == 1) return 0;
    std::int64_t a = mod_pos(u, p), b = p;
    std::int64_t x0 = 1, x1 = 0;
    while (b) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    if (a != 1)
        throw NotCoprime(std::to_string(u) + " has no inverse mod " + std::to_string(p));
    return mod_pos(x0, p);
}

inline std::optional<Int> perfect_square_root(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

// Positive divisors in ascending order (trial division; callers keep inputs desk-scale).
inline std::vector<Int> positive_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline std::int64_t eulers_phi(std::int64_t n) {
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

inline std::string to_string(const Rational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

// Parses "a" or "a/b".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(n, d);
    } catch (const std::runtime_error&) {
        throw ParseError("cannot parse rational '" + s + "'");
    }
}

}  // namespace concordia
