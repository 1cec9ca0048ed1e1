// Exception types used across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace concordia {

struct DegreeGuardExceeded : std::runtime_error {
    explicit DegreeGuardExceeded(long degree)
        : std::runtime_error("polynomial degree " + std::to_string(degree) +
                             " exceeds the factorization guard (12)") {}
};

struct NotSymmetric : std::runtime_error {
    NotSymmetric() : std::runtime_error("polynomial is not conjugation-symmetric") {}
};

struct OddDegree : std::runtime_error {
    OddDegree() : std::runtime_error("symmetric representative has odd degree") {}
};

struct NotIrreducible : std::runtime_error {
    explicit NotIrreducible(const std::string& what) : std::runtime_error(what) {}
};

struct OddSize : std::runtime_error {
    explicit OddSize(std::size_t n)
        : std::runtime_error("Seifert matrix must have even size, got " + std::to_string(n)) {}
};

struct NotUnimodular : std::runtime_error {
    explicit NotUnimodular(const std::string& det)
        : std::runtime_error("det(S - S^T) = " + det + ", expected 1") {}
};

struct WrongSize : std::runtime_error {
    explicit WrongSize(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroIndex : std::runtime_error {
    ZeroIndex() : std::runtime_error("cable index 0 is not a cable; use the constant-zero function") {}
};

struct DuplicateAngle : std::runtime_error {
    explicit DuplicateAngle(const std::string& angle)
        : std::runtime_error("duplicate jump angle " + angle) {}
};

struct NotCoprime : std::runtime_error {
    explicit NotCoprime(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct CaseOne : std::runtime_error {
    explicit CaseOne(const std::string& what) : std::runtime_error(what) {}
};

struct BadM : std::runtime_error {
    explicit BadM(long long m)
        : std::runtime_error("m = " + std::to_string(m) + " is excluded (m must avoid 0 and -1)") {}
};

struct EigenvalueTooClose : std::runtime_error {
    EigenvalueTooClose(const std::string& where, const std::string& gap)
        : std::runtime_error("eigenvalue of modulus " + gap +
                             " below certification tolerance at " + where) {}
};

struct UnknownKnot : std::runtime_error {
    explicit UnknownKnot(const std::string& name)
        : std::runtime_error("no catalog entry named '" + name + "'") {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace concordia
