#include "doctest.h"

#include <random>

#include "nilflat/laurent.hpp"
#include "nilflat/matrix.hpp"
#include "nilflat/rational.hpp"

using namespace nilflat;

TEST_CASE("rational construction and parsing") {
    CHECK(make_rational(6, -4) == Rational(-3, 2));
    CHECK(make_rational(-6, -4) == Rational(3, 2));
    CHECK_THROWS_AS(make_rational(1, 0), domain_error);

    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7/2") == Rational(-7, 2));
    CHECK(parse_rational("-4/-6") == Rational(2, 3));
    CHECK(parse_rational("0") == 0);
    CHECK(to_string(parse_rational("10/-4")) == "-5/2");
    CHECK(to_string(Rational(5)) == "5");

    CHECK_THROWS_AS(parse_rational(""), parse_error);
    CHECK_THROWS_AS(parse_rational("1/"), parse_error);
    CHECK_THROWS_AS(parse_rational("2x"), parse_error);
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);

    CHECK(height(Rational(-7, 2)) == 7);
    CHECK(height(Rational(1, 9)) == 9);
    CHECK(height(Rational(0)) == 1);
}

TEST_CASE("laurent arithmetic identities") {
    auto g1 = LaurentPoly::variable(3, 0);
    auto g2 = LaurentPoly::variable(3, 1);

    CHECK((g1 + g2) * (g1 - g2) == g1 * g1 - g2 * g2);
    CHECK((g1 + g2).pow(2) == g1 * g1 + Rational(2) * g1 * g2 + g2 * g2);
    CHECK((g1 - g1).is_zero());
    CHECK(LaurentPoly::constant(3, 0).is_zero());

    auto inv = LaurentPoly::variable(3, 0, -1);
    CHECK(g1 * inv == LaurentPoly::constant(3, 1));
    CHECK(g1.pow(-2) == inv * inv);
    CHECK_THROWS_AS((g1 + g2).pow(-1), domain_error);
}

TEST_CASE("canonical rendering follows graded lex order") {
    auto p = parse_laurent("g1*g3^-1 - 1", 3);
    CHECK(p.str() == "g1*g3^-1 - 1");

    CHECK(parse_laurent("g1 + g2^2 + g1*g2 - 3", 2).str() == "g1*g2 + g2^2 + g1 - 3");
    CHECK(parse_laurent("-g1 - 1/2", 1).str() == "-g1 - 1/2");
    CHECK(parse_laurent("3/4*g2", 2).str() == "3/4*g2");
    CHECK(parse_laurent("0", 2).str() == "0");
    CHECK(parse_laurent("g1^2*g2^-3", 2).str() == "g1^2*g2^-3");
}

TEST_CASE("parser accepts the forms used by catalog relations") {
    // denominators that are monomials are fine, including parenthesised numerators
    auto p = parse_laurent("g2^2*(g1^2 - g4^2)/(g1^2*g4)", 4);
    auto q = parse_laurent("g2^2*g4^-1 - g2^2*g4*g1^-2", 4);
    CHECK(p == q);

    CHECK(parse_laurent("(g1+g2)/2", 2) ==
          parse_laurent("1/2*g1 + 1/2*g2", 2));
    CHECK(parse_laurent("2^-1", 1) == LaurentPoly::constant(1, Rational(1, 2)));
    CHECK(parse_laurent("-(g1 - g2)", 2) == parse_laurent("g2 - g1", 2));
    CHECK(parse_laurent("3/g1", 1) == parse_laurent("3*g1^-1", 1));

    CHECK_THROWS_AS(parse_laurent("g0", 2), parse_error);
    CHECK_THROWS_AS(parse_laurent("g3", 2), parse_error);
    CHECK_THROWS_AS(parse_laurent("g1 + + g2", 2), parse_error);
    CHECK_THROWS_AS(parse_laurent("g1 )", 2), parse_error);
    CHECK_THROWS_AS(parse_laurent("(g1", 2), parse_error);
    CHECK_THROWS_AS(parse_laurent("", 2), parse_error);
    // dividing by a sum is outside the Laurent ring
    CHECK_THROWS_AS(parse_laurent("g1/(g1+g2)", 2), domain_error);
}

TEST_CASE("division, content, and monic form") {
    auto p = parse_laurent("g1^2*g2 + g1*g2^2", 2);
    CHECK(p.div_by_monomial(parse_laurent("g1*g2", 2)) == parse_laurent("g1 + g2", 2));
    CHECK_THROWS_AS(p.div_by_monomial(parse_laurent("g1 + g2", 2)), domain_error);

    auto r = parse_laurent("2*g1^2*g3^-1 - 2*g1", 3);
    CHECK(r.min_exponents() == ExpVec{1, 0, -1});
    CHECK(r.monic_primitive() == parse_laurent("g1 - g3", 3));
    CHECK(r.monic_primitive().str() == "g1 - g3");
    CHECK(LaurentPoly(3).monic_primitive().is_zero());

    // scale invariance: the monic form certifies equality of conditions
    auto s = parse_laurent("-1/3*g1^5*g3 + 1/3*g1^4*g3^2", 3);
    CHECK(s.monic_primitive() == parse_laurent("g1 - g3", 3));
}

TEST_CASE("substitution closes relation checks") {
    // substituting g2 = g4^2/g1 kills g2 - g4^2*g1^-1
    auto p = parse_laurent("g2 - g4^2*g1^-1", 4);
    auto rep = parse_laurent("g4^2*g1^-1", 4);
    CHECK(p.substitute(1, rep).is_zero());

    // negative occurrences of the substituted variable need a monomial image
    auto q = parse_laurent("g1^-1", 2);
    CHECK_THROWS_AS(q.substitute(0, parse_laurent("g1 + g2", 2)), domain_error);
    CHECK(q.substitute(0, parse_laurent("g2^3", 2)) == parse_laurent("g2^-3", 2));

    // positive occurrences accept any polynomial image
    auto lin = parse_laurent("g1^2 - g2", 2);
    CHECK(lin.substitute(0, parse_laurent("g1 + g2", 2)) ==
          parse_laurent("g1^2 + 2*g1*g2 + g2^2 - g2", 2));
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(20240814);
    auto rand_rat = [&rng]() {
        int num = int(rng() % 19) - 9;
        int den = 1 + int(rng() % 7);
        return Rational(num, den);
    };
    auto rand_poly = [&rng, &rand_rat](int nvars) {
        LaurentPoly p(nvars);
        int nterms = 1 + int(rng() % 4);
        for (int t = 0; t < nterms; ++t) {
            ExpVec e(nvars);
            for (int& x : e)
                x = int(rng() % 7) - 3;
            p += LaurentPoly::monomial(nvars, e, rand_rat());
        }
        return p;
    };

    for (int trial = 0; trial < 40; ++trial) {
        auto a = rand_poly(3);
        auto b = rand_poly(3);
        std::vector<Rational> pt;
        for (int i = 0; i < 3; ++i) {
            Rational v = rand_rat();
            if (v == 0)
                v = Rational(2, 3);
            pt.push_back(v);
        }
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
        CHECK((-a).evaluate(pt) == -a.evaluate(pt));
    }

    auto p = parse_laurent("g1*g2^-1", 2);
    CHECK(p.evaluate({Rational(3), Rational(1, 2)}) == 6);
    CHECK_THROWS_AS(p.evaluate({Rational(3), Rational(0)}), domain_error);
    CHECK(parse_laurent("g1^2", 2).evaluate({Rational(0), Rational(5)}) == 0);
}

TEST_CASE("parse render round trip") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        LaurentPoly p(4);
        int nterms = int(rng() % 5);
        for (int t = 0; t < nterms; ++t) {
            ExpVec e(4);
            for (int& x : e)
                x = int(rng() % 9) - 4;
            int num = int(rng() % 13) - 6;
            p += LaurentPoly::monomial(4, e, Rational(num, 1 + int(rng() % 5)));
        }
        CHECK(parse_laurent(p.str(), 4) == p);
    }
}

TEST_CASE("rank and kernel of arrow incidence rows") {
    // two arrows on five nodes: 1,2 -> 4 and 1,3 -> 5
    QMatrix m(2, 5);
    m.at(0, 0) = -1; m.at(0, 1) = -1; m.at(0, 3) = 1;
    m.at(1, 0) = -1; m.at(1, 2) = -1; m.at(1, 4) = 1;
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.size() == 3);
    // every kernel vector satisfies both incidence relations
    for (const auto& v : rk.kernel) {
        CHECK(v[3] == v[0] + v[1]);
        CHECK(v[4] == v[0] + v[2]);
    }

    // five weight rows on six nodes with one-dimensional kernel (1,2,3,4,5,6)
    int arrows[5][3] = {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 3, 5}, {2, 4, 6}};
    QMatrix w(5, 6);
    for (int r = 0; r < 5; ++r) {
        w.at(r, arrows[r][0] - 1) -= 1;
        w.at(r, arrows[r][1] - 1) -= 1;
        w.at(r, arrows[r][2] - 1) += 1;
    }
    auto wk = rank_and_kernel(w);
    CHECK(wk.rank == 5);
    REQUIRE(wk.kernel.size() == 1);
    for (int i = 0; i < 6; ++i)
        CHECK(wk.kernel[0][i] * 6 == Rational(i + 1) * wk.kernel[0][5]);

    QMatrix z(3, 3);
    auto zk = rank_and_kernel(z);
    CHECK(zk.rank == 0);
    CHECK(zk.kernel.size() == 3);
}

TEST_CASE("kernel vectors are reduced echelon") {
    // pivots must sit on free-column unit entries: each kernel vector has a 1
    // in its own free column and 0 in the free columns of the others
    QMatrix m(2, 4);
    m.at(0, 0) = 2; m.at(0, 1) = 4; m.at(0, 2) = 6; m.at(0, 3) = 8;
    m.at(1, 1) = 3; m.at(1, 2) = 3; m.at(1, 3) = 9;
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank == 2);
    REQUIRE(rk.kernel.size() == 2);
    CHECK(rk.kernel[0][2] == 1);
    CHECK(rk.kernel[0][3] == 0);
    CHECK(rk.kernel[1][2] == 0);
    CHECK(rk.kernel[1][3] == 1);
    // m * v = 0
    for (const auto& v : rk.kernel)
        for (int r = 0; r < 2; ++r) {
            Rational s = 0;
            for (int c = 0; c < 4; ++c)
                s += m.at(r, c) * v[c];
            CHECK(s == 0);
        }
}

TEST_CASE("antiinvariant dimension of a kernel under an involution") {
    // kernel relations v4 = v1 + v2, v5 = v1 + v3 against sigma = (2 5)(3 4)
    std::vector<std::vector<Rational>> kernel = {
        {1, 0, 0, 1, 1},
        {0, 1, 0, 1, 0},
        {0, 0, 1, 0, 1},
    };
    std::vector<int> sigma = {0, 4, 3, 2, 1};
    CHECK(antiinvariant_dim(kernel, sigma) == 1);

    std::vector<int> id = {0, 1, 2, 3, 4};
    CHECK(antiinvariant_dim(kernel, id) == 0);

    // the intersection vector itself
    std::vector<std::vector<Rational>> w = {{0, 1, -1, 1, -1}};
    CHECK(antiinvariant_dim(w, sigma) == 1);
    CHECK(antiinvariant_dim(w, id) == 0);
}
