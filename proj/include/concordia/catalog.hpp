// A small table of Seifert matrices for low-crossing knots, with the
// published Alexander polynomial stored alongside for self-validation: at
// load time each entry's polynomial is recomputed from its matrix and must
// match the stored one exactly (up to units).
//
// Matrix sources: twist and 2-bridge genus-one knots use the standard form
// [[a, 1], [0, b]]; torus knots use the band presentation of their fiber
// surface; the remaining genus-two entries use band matrices checked against
// the Rolfsen table.  Chirality is fixed by the signature at w = -1 noted
// per entry.
#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "concordia/errors.hpp"
#include "concordia/laurent.hpp"
#include "concordia/seifert.hpp"

namespace concordia {

struct CatalogEntry {
    std::string name;
    SeifertMatrix matrix;
    AssocClass expected_alexander;
    std::string notes;
};

namespace detail {

// name / alexander (coeff:exponent form) / notes / matrix block.
inline constexpr const char* kCatalogData = R"(
knot unknot
alexander 1:0
notes genus 0; the empty Seifert matrix
matrix 0

knot 3_1
alexander 1:0 -1:1 1:2
notes trefoil, torus knot T(2,3); band form; sigma(-1) = -2
matrix 2
-1 1
0 -1

knot 4_1
alexander 1:0 -3:1 1:2
notes figure-eight, amphichiral twist knot; sigma identically 0
matrix 2
1 1
0 -1

knot 5_1
alexander 1:0 -1:1 1:2 -1:3 1:4
notes torus knot T(2,5); band form of the fiber; sigma(-1) = -4
matrix 4
-1 1 0 0
0 -1 1 0
0 0 -1 1
0 0 0 -1

knot 5_2
alexander 2:0 -3:1 2:2
notes 2-bridge, genus one form [[a,1],[0,b]] with ab = 2; sigma(-1) = -2
matrix 2
-1 1
0 -2

knot 6_1
alexander 2:0 -5:1 2:2
notes stevedore, slice; genus one form with ab = -2; sigma identically 0
matrix 2
1 1
0 -2

knot 6_2
alexander 1:0 -3:1 3:2 -3:3 1:4
notes genus two band matrix; sigma(-1) = -2
matrix 4
-1 1 0 0
0 -1 1 0
0 0 -1 1
0 0 0 1

knot 6_3
alexander 1:0 -3:1 5:2 -3:3 1:4
notes genus two band matrix, amphichiral; sigma identically 0
matrix 4
-1 1 0 0
0 -1 1 0
0 0 1 1
0 0 0 1

knot 7_1
alexander 1:0 -1:1 1:2 -1:3 1:4 -1:5 1:6
notes torus knot T(2,7); band form of the fiber; sigma(-1) = -6
matrix 6
-1 1 0 0 0 0
0 -1 1 0 0 0
0 0 -1 1 0 0
0 0 0 -1 1 0
0 0 0 0 -1 1
0 0 0 0 0 -1

knot 7_2
alexander 3:0 -5:1 3:2
notes twist-type genus one form with ab = 3; sigma(-1) = -2
matrix 2
-1 1
0 -3

knot 7_3
alexander 2:0 -3:1 3:2 -3:3 2:4
notes genus two band matrix; sigma(-1) = -4
matrix 4
-2 1 0 0
0 -1 1 0
0 0 -1 1
0 0 0 -1

knot 7_4
alexander 4:0 -7:1 4:2
notes Cooper's genus one example, ab = 4; sigma(-1) = -2
matrix 2
-2 1
0 -2

knot 7_5
alexander 2:0 -4:1 5:2 -4:3 2:4
notes genus two band matrix; sigma(-1) = -4
matrix 4
-1 1 0 0
0 -2 1 0
0 0 -1 1
0 0 0 -1

knot 8_1
alexander 3:0 -7:1 3:2
notes genus one form with ab = -3; sigma identically 0
matrix 2
1 1
0 -3
)";

}  // namespace detail

/// Parses catalog text (the embedded table or an external file in the same
/// format), validating every entry.
inline std::vector<CatalogEntry> catalog_parse(std::istream& in) {
    std::vector<CatalogEntry> out;
    std::string line;
    CatalogEntry cur;
    bool open = false;
    auto flush = [&]() {
        if (!open) return;
        if (!(alexander(cur.matrix) == cur.expected_alexander))
            throw ParseError("catalog entry '" + cur.name +
                             "' failed validation: recomputed Alexander polynomial " +
                             alexander(cur.matrix).rep().display() + " does not match stored " +
                             cur.expected_alexander.rep().display());
        out.push_back(cur);
        cur = CatalogEntry{};
        open = false;
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "knot") {
            flush();
            open = true;
            ls >> cur.name;
        } else if (key == "alexander") {
            std::string rest;
            std::getline(ls, rest);
            cur.expected_alexander = AssocClass(LaurentPoly::parse(rest));
        } else if (key == "notes") {
            std::string rest;
            std::getline(ls, rest);
            cur.notes = rest.empty() ? rest : rest.substr(1);
        } else if (key == "matrix") {
            std::size_t n = 0;
            ls >> n;
            std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n));
            for (std::size_t i = 0; i < n; ++i) {
                if (!std::getline(in, line)) throw ParseError("catalog: truncated matrix");
                std::istringstream rs(line);
                for (std::size_t j = 0; j < n; ++j)
                    if (!(rs >> rows[i][j])) throw ParseError("catalog: bad matrix row: " + line);
            }
            cur.matrix = SeifertMatrix::validate(rows);
        } else {
            throw ParseError("catalog: unknown key '" + key + "'");
        }
    }
    flush();
    return out;
}

/// The built-in table, parsed and validated once.
inline const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::istringstream in(detail::kCatalogData);
        return catalog_parse(in);
    }();
    return entries;
}

inline const CatalogEntry& catalog_lookup(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw UnknownKnot(name);
}

}  // namespace concordia
