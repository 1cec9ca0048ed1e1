#include <catch_amalgamated.hpp>

#include "concordia/kronecker.hpp"
#include "concordia/laurent.hpp"
#include "test_util.hpp"

using namespace concordia;

namespace {
LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, long long>> terms) {
    LaurentPoly p;
    for (auto& [e, c] : terms) p.add_term(e, Int(c));
    return p;
}
}  // namespace

TEST_CASE("normalize_assoc canonicalizes by units") {
    // -2t^3 + 5t^2 - 2t  ->  2t^2 - 5t + 2
    auto p = poly({{3, -2}, {2, 5}, {1, -2}});
    CHECK(normalize_assoc(p).rep() == poly({{2, 2}, {1, -5}, {0, 2}}));

    CHECK(normalize_assoc(poly({{0, 1}})).rep() == poly({{0, 1}}));

    // t^-1 - 1 -> t - 1 via shift then sign
    CHECK(normalize_assoc(poly({{-1, 1}, {0, -1}})).rep() == poly({{1, 1}, {0, -1}}));

    // idempotent, zero fixed
    CHECK(normalize_assoc(normalize_assoc(p).rep()) == normalize_assoc(p));
    CHECK(normalize_assoc(LaurentPoly()).rep().is_zero());
}

TEST_CASE("conjugate flips exponents and is an involution") {
    CHECK(conjugate(poly({{1, 2}, {0, -1}})) == poly({{-1, 2}, {0, -1}}));
    auto p = poly({{2, 1}, {1, -1}, {0, 1}});
    CHECK(normalize_assoc(conjugate(p)) == normalize_assoc(p));  // symmetric
    CHECK(conjugate(poly({{0, 5}})) == poly({{0, 5}}));

    auto r = testutil::rng(11);
    for (int i = 0; i < 50; ++i) {
        auto q = testutil::random_poly(r, 5, 6).shifted(testutil::pick(r, -3, 3));
        CHECK(conjugate(conjugate(q)) == q);
    }
}

TEST_CASE("normalize_assoc is multiplicative") {
    auto r = testutil::rng(12);
    for (int i = 0; i < 60; ++i) {
        auto p = testutil::random_poly(r, 4, 5).shifted(testutil::pick(r, -2, 2));
        auto q = testutil::random_poly(r, 3, 5).shifted(testutil::pick(r, -2, 2));
        CHECK(normalize_assoc(p * q) ==
              normalize_assoc(normalize_assoc(p).rep() * normalize_assoc(q).rep()));
    }
}

TEST_CASE("factor_rational splits into irreducibles with exact reassembly") {
    auto f = factor_rational(poly({{2, 2}, {1, -5}, {0, 2}}));
    REQUIRE(f.factors.size() == 2);
    CHECK(f.content == 1);
    CHECK(f.factors[0] == ZPoly{Int(-2), Int(1)});  // t - 2
    CHECK(f.factors[1] == ZPoly{Int(-1), Int(2)});  // 2t - 1

    auto g = factor_rational(poly({{2, 1}, {1, -1}, {0, 1}}));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0] == ZPoly{Int(1), Int(-1), Int(1)});

    auto h = factor_rational(poly({{2, 1}, {0, -1}}));  // t^2 - 1
    REQUIRE(h.factors.size() == 2);
    CHECK(h.factors[0] == ZPoly{Int(-1), Int(1)});
    CHECK(h.factors[1] == ZPoly{Int(1), Int(1)});

    CHECK_THROWS_AS(factor_rational(LaurentPoly::monomial(1, 13) + LaurentPoly::constant(1)),
                    DegreeGuardExceeded);

    auto r = testutil::rng(13);
    for (int i = 0; i < 40; ++i) {
        auto p = testutil::random_poly(r, static_cast<int>(testutil::pick(r, 1, 6)), 8);
        auto fac = factor_rational(p);
        LaurentPoly prod = LaurentPoly::constant(fac.content);
        for (const auto& z : fac.factors) prod = prod * zp_to_laurent(z);
        CHECK(normalize_assoc(prod) == normalize_assoc(p));
    }
}

TEST_CASE("fox_milnor decides the delta(t) delta(1/t) factorization") {
    auto yes = fox_milnor(poly({{2, 2}, {1, -5}, {0, 2}}));
    REQUIRE(yes.has_value());
    CHECK(normalize_assoc(*yes * conjugate(*yes)) == normalize_assoc(poly({{2, 2}, {1, -5}, {0, 2}})));

    CHECK_FALSE(fox_milnor(poly({{2, 1}, {1, -1}, {0, 1}})).has_value());  // trefoil
    CHECK_FALSE(fox_milnor(poly({{2, 1}, {1, -3}, {0, 1}})).has_value());  // figure-eight

    auto unit = fox_milnor(poly({{0, 1}}));
    REQUIRE(unit.has_value());
    CHECK(*unit == poly({{0, 1}}));

    // non-square content has no integer witness
    CHECK_FALSE(fox_milnor(poly({{0, 5}})).has_value());

    auto r = testutil::rng(14);
    int checked = 0;
    for (int i = 0; checked < 100; ++i) {
        auto delta = testutil::random_poly(r, static_cast<int>(testutil::pick(r, 1, 4)), 4);
        auto witness = fox_milnor(delta * conjugate(delta));
        REQUIRE(witness.has_value());
        CHECK(normalize_assoc(*witness * conjugate(*witness)) ==
              normalize_assoc(delta * conjugate(delta)));
        ++checked;
    }
}

TEST_CASE("eigen_annihilator finds minimal divisors of a t^p - b") {
    auto a1 = eigen_annihilator(poly({{1, 1}, {0, -2}}), 5);
    REQUIRE(a1.has_value());
    CHECK((a1->a == 1 && a1->b == 2 && a1->p == 1));

    auto a2 = eigen_annihilator(poly({{2, 1}, {1, -1}, {0, 1}}), 5);
    REQUIRE(a2.has_value());
    CHECK((a2->a == 1 && a2->b == -1 && a2->p == 3));

    CHECK_FALSE(eigen_annihilator(poly({{2, 1}, {1, -3}, {0, 1}}), 20).has_value());

    // leading coefficient folds into a
    auto a3 = eigen_annihilator(poly({{1, 2}, {0, -1}}), 5);
    REQUIRE(a3.has_value());
    CHECK((a3->a == 2 && a3->b == 1 && a3->p == 1));

    CHECK_THROWS_AS(eigen_annihilator(poly({{2, 1}, {0, -1}}), 5), NotIrreducible);
    CHECK_THROWS_AS(eigen_annihilator(poly({{3, 7}}), 5), NotIrreducible);

    // found(a,b,p) implies exact divisibility, rechecked by division here
    auto r = testutil::rng(15);
    for (int i = 0; i < 30; ++i) {
        std::int64_t aa = testutil::pick(r, 1, 5), bb = testutil::pick(r, -5, 5);
        if (bb == 0 || std::abs(aa) == std::abs(bb)) continue;
        auto g = gcd_i64(aa, bb);
        LaurentPoly delta = poly({{1, aa / g}, {0, -bb / g}});
        auto found = eigen_annihilator(delta, 8);
        REQUIRE(found.has_value());
        ZPoly bin(static_cast<std::size_t>(found->p) + 1, Int(0));
        bin[0] = -found->b;
        bin.back() = found->a;
        CHECK(zp_divide_exact(bin, zp_from_canonical(delta)).has_value());
    }
}

TEST_CASE("cos_substitute rewrites symmetric polynomials in z = t + 1/t") {
    CHECK(cos_substitute(poly({{2, 1}, {1, -1}, {0, 1}})) == ZPoly{Int(-1), Int(1)});
    CHECK(cos_substitute(poly({{2, 1}, {1, -3}, {0, 1}})) == ZPoly{Int(-3), Int(1)});
    CHECK(cos_substitute(poly({{2, 2}, {1, -5}, {0, 2}})) == ZPoly{Int(-5), Int(2)});

    // degree-4 case: t^4 - t^3 + t^2 - t + 1 -> z^2 - z - 1
    CHECK(cos_substitute(poly({{4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}})) ==
          ZPoly{Int(-1), Int(-1), Int(1)});

    CHECK_THROWS_AS(cos_substitute(poly({{2, 1}, {0, -1}})), NotSymmetric);   // anti-palindromic
    CHECK_THROWS_AS(cos_substitute(poly({{2, 1}, {0, 2}})), NotSymmetric);
    CHECK_THROWS_AS(cos_substitute(poly({{1, 1}, {0, 1}})), OddDegree);

    // exactness: q(t + 1/t) * t^d == p for random symmetric p
    auto r = testutil::rng(16);
    for (int i = 0; i < 30; ++i) {
        auto half = testutil::random_poly(r, 3, 4);
        auto p = half * conjugate(half);  // symmetric by construction
        auto canon = normalize_assoc(p).rep();
        auto q = cos_substitute(canon);
        // evaluate both sides at several rational t
        for (std::int64_t tv = 2; tv <= 4; ++tv) {
            Rational t(tv, 1);
            Rational z = t + Rational(1) / t;
            Rational lhs = canon.eval(t);
            Rational rhs = zp_eval(q, z);
            std::int64_t d = canon.highest_exponent() / 2;
            for (std::int64_t j = 0; j < d; ++j) rhs *= t;
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("serialization round-trips and rejects duplicates") {
    auto p = poly({{2, 2}, {1, -5}, {0, 2}});
    CHECK(p.serialize() == "2:0 -5:1 2:2");
    CHECK(LaurentPoly::parse("2:0 -5:1 2:2") == p);
    CHECK(LaurentPoly::parse("") == LaurentPoly());
    CHECK_THROWS_AS(LaurentPoly::parse("1:0 2:0"), ParseError);
    CHECK_THROWS_AS(LaurentPoly::parse("nonsense"), ParseError);

    auto r = testutil::rng(17);
    for (int i = 0; i < 30; ++i) {
        auto q = testutil::random_poly(r, 6, 9).shifted(testutil::pick(r, -4, 4));
        CHECK(LaurentPoly::parse(q.serialize()) == q);
    }
}
