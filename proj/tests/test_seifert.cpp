#include <catch_amalgamated.hpp>

#include "concordia/seifert.hpp"
#include "test_util.hpp"

using namespace concordia;

namespace {
LaurentPoly genus1_alexander(std::int64_t l) {
    // (lambda t - (lambda+1)) ((lambda+1) t - lambda)
    LaurentPoly a{{1, Int(l)}, {0, Int(-(l + 1))}};
    LaurentPoly b{{1, Int(l + 1)}, {0, Int(-l)}};
    return a * b;
}
}  // namespace

TEST_CASE("validate accepts Seifert matrices and reports failures") {
    CHECK(SeifertMatrix::validate({{-1, 1}, {0, -1}}).size() == 2);
    CHECK(SeifertMatrix::validate({}).size() == 0);
    CHECK_THROWS_AS(SeifertMatrix::validate({{0, 2}, {0, 0}}), NotUnimodular);
    CHECK_THROWS_AS(SeifertMatrix::validate({{1}}), OddSize);
    CHECK_THROWS_AS(SeifertMatrix::validate({{1, 0}, {0, 1}}), NotUnimodular);
    CHECK_THROWS_AS(SeifertMatrix::validate({{1, 0, 0}, {0, 1, 0}}), WrongSize);

    try {
        SeifertMatrix::validate({{0, 2}, {0, 0}});
        FAIL("expected NotUnimodular");
    } catch (const NotUnimodular& e) {
        CHECK(std::string(e.what()).find("4") != std::string::npos);
    }
}

TEST_CASE("genus1 builds the standard derivative form") {
    auto s = SeifertMatrix::genus1(1, 0);
    CHECK(s.entries() == IntMatrix::from_rows({{0, 1}, {2, 0}}));
    CHECK(SeifertMatrix::genus1(0, 0).entries() == IntMatrix::from_rows({{0, 0}, {1, 0}}));
    CHECK(SeifertMatrix::genus1(-2, 3).entries() == IntMatrix::from_rows({{0, -2}, {-1, 3}}));
}

TEST_CASE("alexander matches the genus-one closed form") {
    for (std::int64_t l = -5; l <= 5; ++l)
        for (std::int64_t e = -3; e <= 3; ++e)
            CHECK(alexander(SeifertMatrix::genus1(l, e)) == normalize_assoc(genus1_alexander(l)));

    CHECK(alexander(SeifertMatrix::validate({{-1, 1}, {0, -1}})).rep() ==
          LaurentPoly{{2, Int(1)}, {1, Int(-1)}, {0, Int(1)}});
    CHECK(alexander(SeifertMatrix()).rep() == LaurentPoly::constant(1));
}

TEST_CASE("alexander evaluates to a unit at t = 1") {
    auto r = testutil::rng(21);
    for (int i = 0; i < 25; ++i) {
        auto s = SeifertMatrix::genus1(testutil::pick(r, -6, 6), testutil::pick(r, -4, 4));
        auto v = alexander(s).rep().eval(Rational(1));
        CHECK((v == 1 || v == -1));
    }
    auto t51 = SeifertMatrix::validate(
        {{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}});
    auto v = alexander(t51).rep().eval(Rational(1));
    CHECK((v == 1 || v == -1));
}

TEST_CASE("connected_sum is block-diagonal and multiplies alexander") {
    auto tre = SeifertMatrix::validate({{-1, 1}, {0, -1}});
    CHECK(connected_sum(tre, SeifertMatrix()) == tre);
    CHECK(connected_sum(SeifertMatrix(), tre) == tre);

    auto doubled = connected_sum(tre, tre);
    CHECK(doubled.size() == 4);
    auto sq = alexander(tre).rep() * alexander(tre).rep();
    CHECK(alexander(doubled) == normalize_assoc(sq));

    auto r = testutil::rng(22);
    for (int i = 0; i < 20; ++i) {
        auto s1 = SeifertMatrix::genus1(testutil::pick(r, -4, 4), testutil::pick(r, -3, 3));
        auto s2 = SeifertMatrix::genus1(testutil::pick(r, -4, 4), testutil::pick(r, -3, 3));
        CHECK(alexander(connected_sum(s1, s2)) ==
              normalize_assoc(alexander(s1).rep() * alexander(s2).rep()));
    }
}

TEST_CASE("mirror negates and transposes, preserving alexander") {
    auto tre = SeifertMatrix::validate({{-1, 1}, {0, -1}});
    CHECK(mirror(tre).entries() == IntMatrix::from_rows({{1, 0}, {-1, 1}}));
    CHECK(mirror(SeifertMatrix()).size() == 0);
    CHECK(mirror(mirror(tre)) == tre);

    auto r = testutil::rng(23);
    for (int i = 0; i < 20; ++i) {
        auto s = SeifertMatrix::genus1(testutil::pick(r, -4, 4), testutil::pick(r, -3, 3));
        CHECK(alexander(mirror(s)) == alexander(s));
    }
}

TEST_CASE("metabolizer_genus1 decides binary isotropy exactly") {
    for (std::int64_t l = -3; l <= 3; ++l)
        for (std::int64_t e = -2; e <= 2; ++e) {
            auto v = metabolizer_genus1(SeifertMatrix::genus1(l, e));
            REQUIRE(v.has_value());
            CHECK((*v == std::vector<std::int64_t>{1, 0}));
        }

    CHECK_FALSE(metabolizer_genus1(SeifertMatrix::validate({{1, 1}, {0, -1}})).has_value());
    CHECK_FALSE(metabolizer_genus1(SeifertMatrix::validate({{-1, 1}, {0, -1}})).has_value());

    // stevedore: x^2 + xy - 2y^2 = (x - y)(x + 2y)
    auto v61 = metabolizer_genus1(SeifertMatrix::validate({{1, 1}, {0, -2}}));
    REQUIRE(v61.has_value());

    CHECK_THROWS_AS(metabolizer_genus1(SeifertMatrix()), WrongSize);

    // found vectors are primitive and isotropic, rechecked here
    auto r = testutil::rng(24);
    for (int i = 0; i < 60; ++i) {
        std::vector<std::vector<std::int64_t>> rows{
            {testutil::pick(r, -4, 4), testutil::pick(r, -4, 4)},
            {0, testutil::pick(r, -4, 4)}};
        rows[1][0] = rows[0][1] - 1;  // keep det(S - S^T) = 1
        SeifertMatrix s;
        try {
            s = SeifertMatrix::validate(rows);
        } catch (const NotUnimodular&) {
            continue;
        }
        auto v = metabolizer_genus1(s);
        if (!v) continue;
        auto& S = s.entries();
        Int x((*v)[0]), y((*v)[1]);
        CHECK(S(0, 0) * x * x + (S(0, 1) + S(1, 0)) * x * y + S(1, 1) * y * y == 0);
        CHECK(gcd_i64((*v)[0], (*v)[1]) == 1);
    }
}

TEST_CASE("isotropic_search finds half-rank summands") {
    auto block = connected_sum(SeifertMatrix::genus1(1, 0), SeifertMatrix::genus1(1, 0));
    auto basis = isotropic_search(block, 3);
    REQUIRE(basis.has_value());
    REQUIRE(basis->size() == 2);

    auto tre = SeifertMatrix::validate({{-1, 1}, {0, -1}});
    CHECK_FALSE(isotropic_search(tre, 10).has_value());

    auto sq = connected_sum(tre, mirror(tre));
    auto b2 = isotropic_search(sq, 3);
    REQUIRE(b2.has_value());

    // recheck: all ordered pairs vanish and the span is a direct summand
    for (auto which : {*basis, *b2}) {
        const auto& S = which == *basis ? block : sq;
        IntMatrix B(which.size(), S.size());
        for (std::size_t i = 0; i < which.size(); ++i) {
            std::vector<Int> u(which[i].begin(), which[i].end());
            for (std::size_t j = 0; j < which.size(); ++j) {
                std::vector<Int> v(which[j].begin(), which[j].end());
                Int acc = 0;
                for (std::size_t a = 0; a < u.size(); ++a)
                    for (std::size_t b = 0; b < v.size(); ++b)
                        acc += u[a] * S.entries()(a, b) * v[b];
                CHECK(acc == 0);
            }
            for (std::size_t j = 0; j < S.size(); ++j) B(i, j) = which[i][j];
        }
        CHECK(maximal_minor_gcd(B) == 1);
    }
}
