// File formats: Seifert matrix files, step-function files, profile export
// and CSV sampling of signature functions.
#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "concordia/errors.hpp"
#include "concordia/seifert.hpp"
#include "concordia/sigfn.hpp"
#include "concordia/signature.hpp"

namespace concordia {

/// Matrix file: first line the size n, then n lines of n integers.
inline SeifertMatrix read_matrix(std::istream& in) {
    std::size_t n = 0;
    if (!(in >> n)) throw ParseError("matrix file: missing size line");
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!(in >> rows[i][j])) throw ParseError("matrix file: truncated entries");
    return SeifertMatrix::validate(rows);
}

inline void write_matrix(std::ostream& out, const SeifertMatrix& s) {
    out << s.size() << '\n';
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (j) out << ' ';
            out << s.entries()(i, j).str();
        }
        out << '\n';
    }
}

/// Step-function file: optional "base num/den" first line, then one
/// "angle_num/angle_den jump_num/jump_den" line per jump.
inline RationalStepFn read_step_fn(std::istream& in) {
    std::vector<std::pair<UnitAngle, Rational>> jumps;
    Rational base = 0;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string a, b;
        ls >> a;
        if (first && a == "base") {
            ls >> b;
            base = parse_rational(b);
            first = false;
            continue;
        }
        first = false;
        if (!(ls >> b)) throw ParseError("step file: expected 'angle jump' on line: " + line);
        jumps.emplace_back(UnitAngle(parse_rational(a)), parse_rational(b));
    }
    return RationalStepFn::from_jumps(std::move(jumps), base);
}

inline void write_step_fn(std::ostream& out, const RationalStepFn& f) {
    if (f.base() != 0) out << "base " << to_string(f.base()) << '\n';
    for (const auto& j : f.jumps())
        out << j.angle.str() << ' ' << to_string(j.amount) << '\n';
}

/// Profile export: "interval_lo interval_hi value" lines for the certified
/// jump-free arcs of (0, 1/2], interleaved with
/// "jump theta_lo theta_hi amount" lines at the jumps.
inline void write_profile(std::ostream& out, const SignatureProfile& prof) {
    const auto& loci = prof.loci();
    const auto& jumps = prof.jumps();
    // arc values recomputed from the jumps (zero-jump candidates are not breaks)
    Rational lo = 0;
    int value = 0;
    for (std::size_t i = 0; i < loci.size(); ++i) {
        out << to_string(lo) << ' ' << to_string(loci[i].theta_lo) << ' ' << value << '\n';
        out << "jump " << to_string(loci[i].theta_lo) << ' ' << to_string(loci[i].theta_hi) << ' '
            << jumps[i] << '\n';
        value += jumps[i];
        lo = loci[i].theta_hi;
    }
    out << to_string(lo) << ' ' << to_string(Rational(1, 2)) << ' ' << value << '\n';
}

/// Uniform sampling to CSV: theta, averaged value at theta = j/steps.
inline void write_csv_samples(std::ostream& out, const SignatureFunction& f, std::int64_t steps) {
    out << "theta,value\n";
    for (std::int64_t j = 0; j < steps; ++j) {
        UnitAngle theta(j, steps);
        out << theta.str() << ',' << to_string(f.eval(theta, Side::averaged)) << '\n';
    }
}

}  // namespace concordia
