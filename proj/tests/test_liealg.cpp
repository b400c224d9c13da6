#include <doctest.h>

#include "nilflat/liealg.hpp"

using namespace nilflat;

namespace {

LieAlgebra::BracketMap single_target_map(
    const std::vector<std::tuple<int, int, int>>& arrows) {
    LieAlgebra::BracketMap m;
    for (auto [i, j, k] : arrows)
        m[{i, j}].push_back({k, Rational(1)});
    return m;
}

} // namespace

TEST_CASE("bracket lookup and antisymmetry") {
    // (0,0,e^{12},e^{13})
    LieAlgebra a = parse_structure("(0,0,e^{12},e^{13})");
    CHECK(a.dim() == 4);
    CHECK(a.coeff(1, 2, 3) == 1);
    CHECK(a.coeff(2, 1, 3) == -1);
    CHECK(a.coeff(1, 3, 4) == 1);
    CHECK(a.coeff(1, 2, 4) == 0);
    CHECK(a.coeff(3, 3, 4) == 0);

    auto b = a.bracket(1, 2);
    CHECK(b == std::vector<Rational>{0, 0, 1, 0});
    CHECK(a.bracket(2, 1) == std::vector<Rational>{0, 0, -1, 0});
    CHECK(a.bracket(2, 2) == std::vector<Rational>{0, 0, 0, 0});

    // [e1+e2, e2+e3] = [e1,e2] + [e1,e3] + [e2,e3] = e3 + e4
    std::vector<Rational> u{1, 1, 0, 0}, v{0, 1, 1, 0};
    CHECK(a.bracket_vec(u, v) == std::vector<Rational>{0, 0, 1, 1});
    CHECK(a.bracket_vec(v, u) == std::vector<Rational>{0, 0, -1, -1});
    CHECK_THROWS_AS(a.bracket_vec({1, 0, 0}, v), domain_error);

    CHECK(a.commutator_indices() == std::vector<int>{3, 4});
}

TEST_CASE("constructor normalizes terms") {
    LieAlgebra::BracketMap m;
    m[{1, 2}] = {{3, Rational(1)}, {3, Rational(2)}, {4, Rational(1)}, {4, Rational(-1)}};
    LieAlgebra a(4, m);
    CHECK(a.coeff(1, 2, 3) == 3);
    CHECK(a.coeff(1, 2, 4) == 0);
    CHECK(a.brackets().size() == 1);
    CHECK(a.brackets().at({1, 2}).size() == 1);

    m.clear();
    m[{2, 1}] = {{3, Rational(1)}};
    CHECK_THROWS_AS(LieAlgebra(4, m, ""), domain_error);
    m.clear();
    m[{1, 2}] = {{5, Rational(1)}};
    CHECK_THROWS_AS(LieAlgebra(4, m, ""), domain_error);
}

TEST_CASE("jacobi identity check") {
    // the 7-node diagram from the introduction admits no nonzero structure
    // constants; with all coefficients 1 the first failing triple is (1,2,4)
    LieAlgebra bad(7, single_target_map({{1, 2, 3},
                                         {1, 3, 4},
                                         {1, 4, 5},
                                         {2, 5, 6},
                                         {3, 4, 6},
                                         {1, 6, 7},
                                         {3, 5, 7}}));
    auto w = check_jacobi(bad);
    REQUIRE(w.has_value());
    CHECK(w->i == 1);
    CHECK(w->j == 2);
    CHECK(w->k == 4);
    CHECK(w->residual == std::vector<Rational>{0, 0, 0, 0, 0, 2, 0});

    LieAlgebra abelian(5, {});
    CHECK(!check_jacobi(abelian).has_value());

    LieAlgebra four_step = parse_structure("(0,0,e^{12},e^{13},e^{14}+e^{23},e^{15}+e^{24})");
    CHECK(!check_jacobi(four_step).has_value());
}

TEST_CASE("parser handles parameters and variants") {
    const std::string fam =
        "(0,0,(1-lambda)e^{12},e^{13},lambda e^{14}+e^{23},e^{24}+e^{15},e^{34}+e^{25}+e^{16})";
    LieAlgebra two = parse_structure(fam, {{"lambda", Rational(2)}});
    CHECK(two.coeff(1, 2, 3) == -1);
    CHECK(two.coeff(1, 4, 5) == 2);
    CHECK(two.coeff(2, 3, 5) == 1);
    CHECK(two.coeff(3, 4, 7) == 1);
    LieAlgebra half = parse_structure(fam, {{"lambda", make_rational(1, 2)}});
    CHECK(half.coeff(1, 2, 3) == make_rational(1, 2));

    // greek letter spelled directly, and a juxtaposed product coefficient
    LieAlgebra greek = parse_structure("(0,0,(1-λ)e^{12},e^{13},λe^{14}+e^{23},"
                                       "e^{24}+e^{15},e^{34}+e^{25}+e^{16})",
                                       {{"lambda", Rational(2)}});
    CHECK(greek == two);

    LieAlgebra scaled = parse_structure("(0,0,2*3e^{12})");
    CHECK(scaled.coeff(1, 2, 3) == 6);
    LieAlgebra affine = parse_structure("(0,0,(A-1)e^{12})", {{"A", Rational(3)}});
    CHECK(affine.coeff(1, 2, 3) == 2);
    LieAlgebra fraction = parse_structure("(0,0,1/2e^{12}-3/4e^{13},0)");
    CHECK(fraction.coeff(1, 2, 3) == make_rational(1, 2));
    CHECK(fraction.coeff(1, 3, 3) == make_rational(-3, 4));

    // plus/minus entries expand according to the selected variant
    const std::string pm = "(0,0,e^{12},e^{13},e^{23},e^{14}±e^{25})";
    LieAlgebra a2a = parse_structure(pm, {}, SignVariant::plus);
    LieAlgebra a2b = parse_structure(pm, {}, SignVariant::minus);
    CHECK(a2a.coeff(2, 5, 6) == 1);
    CHECK(a2b.coeff(2, 5, 6) == -1);
    CHECK(a2a.coeff(1, 4, 6) == 1);
    CHECK(a2b.coeff(1, 4, 6) == 1);
    CHECK_THROWS_AS(parse_structure(pm), parse_error);

    // reversed index order flips the sign
    LieAlgebra rev = parse_structure("(0,0,e^{21})");
    CHECK(rev.coeff(1, 2, 3) == -1);
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_structure("(0,0,e^{12}"), parse_error);
    CHECK_THROWS_AS(parse_structure("(0,0,e^{1})"), parse_error);
    CHECK_THROWS_AS(parse_structure("(0,0,e^{11})"), parse_error);
    CHECK_THROWS_AS(parse_structure("(0,0,e^{14})"), parse_error);
    CHECK_THROWS_AS(parse_structure("(0,0,e^{123})"), parse_error);
    CHECK_THROWS_AS(parse_structure("(0,0,lambda e^{12})"), parse_error);
    CHECK_THROWS_AS(parse_structure("(0,0,e^{12}) x"), parse_error);
    CHECK_THROWS_AS(parse_structure("0,0,e^{12}"), parse_error);
    CHECK_THROWS_AS(parse_structure("(0,0,+)"), parse_error);
    CHECK_THROWS_AS(parse_structure(""), parse_error);

    // syntax errors carry a position
    try {
        parse_structure("(0,0,e^{12)");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.pos != parse_error::npos);
    }

    // structurally fine but d^2 != 0: jacobi failure is a domain error
    try {
        parse_structure("(0,0,e^{12},e^{13},e^{14},e^{25}+e^{34},e^{16}+e^{35})");
        FAIL("expected domain_error");
    } catch (const domain_error& e) {
        CHECK(std::string(e.what()).find("Jacobi") != std::string::npos);
        CHECK(std::string(e.what()).find("e1") != std::string::npos);
    }
}

TEST_CASE("canonical rendering round trips byte for byte") {
    for (const std::string text : {
             "(0,0,e^{12},e^{13})",
             "(0,0,0,0,0,e^{12})",
             "(0,0,-e^{12},e^{13},e^{14}+e^{23},e^{25}+e^{34})",
             "(0,0,1/2e^{12},e^{13},1/2e^{14}+e^{23},e^{15}+e^{24},e^{16}+e^{25}+e^{34})",
             "(0,0,-e^{12},e^{13},2e^{14}+e^{23},e^{15}+e^{24},e^{16}+e^{25}+e^{34})",
             "(0,0,0,0,0,0,0,0,0,0,e^{6,10})",
             "(0)",
             "(0,0,e^{12},-3/4e^{13})",
         }) {
        LieAlgebra a = parse_structure(text);
        CHECK(a.str() == text);
        CHECK(parse_structure(a.str()) == a);
    }

    // non-canonical input normalizes: term order, merged duplicates, signs
    LieAlgebra a = parse_structure("(0,0,0,0,0,0,e^{34} + e^{25}+2e^{16}-e^{16})");
    CHECK(a.str() == "(0,0,0,0,0,0,e^{16}+e^{25}+e^{34})");
    CHECK(parse_structure("(0, 0, e^{12} - e^{12})").str() == "(0,0,0)");
}

TEST_CASE("nice structure extraction") {
    LieAlgebra a = parse_structure("(0,0,e^{12},e^{13},e^{14}+e^{23},e^{15}+e^{24})");
    NiceExtraction ex = extract_nice_structure(a);
    REQUIRE(ex.diagram.has_value());
    CHECK(ex.witness.empty());
    CHECK(ex.coeffs.size() == 6);
    CHECK(ex.diagram->nodes() == 6);
    CHECK(ex.diagram->has_arrow(1, 2, 3));
    CHECK(ex.diagram->has_arrow(2, 3, 5));
    CHECK(ex.diagram->has_arrow(2, 4, 6));
    CHECK(ex.diagram->has_arrow(4, 2, 6)); // symmetric completion
    for (const auto& r : ex.diagram->validate())
        CHECK(r.pass);
    CHECK(ex.coeffs.at({1, 2}) == 1);

    // coefficients survive extraction
    LieAlgebra b = parse_structure("(0,0,-e^{12},e^{13},e^{14}+e^{23},e^{25}+e^{34})");
    NiceExtraction exb = extract_nice_structure(b);
    REQUIRE(exb.diagram.has_value());
    CHECK(exb.coeffs.at({1, 2}) == -1);

    // abelian: empty diagram
    NiceExtraction exab = extract_nice_structure(LieAlgebra(3, {}));
    REQUIRE(exab.diagram.has_value());
    CHECK(exab.diagram->arrows().empty());
    CHECK(exab.diagram->nodes() == 3);

    // a contraction spanning two covectors means the basis is not nice
    LieAlgebra not_nice = parse_structure("(0,0,0,e^{12},e^{14},e^{15}+e^{23}+e^{24})");
    NiceExtraction exn = extract_nice_structure(not_nice);
    CHECK(!exn.diagram.has_value());
    CHECK(exn.witness == "contraction e2 -| de^6 spans e^3 and e^4");

    // a bracket with two targets also fails
    LieAlgebra::BracketMap m;
    m[{1, 2}] = {{3, Rational(1)}, {4, Rational(1)}};
    NiceExtraction ext = extract_nice_structure(LieAlgebra(4, m));
    CHECK(!ext.diagram.has_value());
    CHECK(ext.witness == "bracket [e1,e2] hits 2 basis elements");
}

TEST_CASE("lower central series profile") {
    SeriesProfile p = series_profile(
        parse_structure("(0,0,e^{12},e^{13},e^{14}+e^{23},e^{15}+e^{24})"));
    CHECK(p.lcs_dims == std::vector<int>{6, 4, 3, 2, 1});
    CHECK(p.step == 5);
    CHECK(p.center_dim == 1);
    CHECK(p.complement_dim == 5);

    SeriesProfile h3 = series_profile(parse_structure("(0,0,e^{12})"));
    CHECK(h3.lcs_dims == std::vector<int>{3, 1});
    CHECK(h3.step == 2);
    CHECK(h3.center_dim == 1);
    CHECK(h3.complement_dim == 2);

    SeriesProfile four = series_profile(parse_structure("(0,0,e^{12},e^{13})"));
    CHECK(four.lcs_dims == std::vector<int>{4, 2, 1});
    CHECK(four.step == 3);
    CHECK(four.center_dim == 1);

    SeriesProfile six = series_profile(parse_structure("(0,0,0,0,0,e^{12})"));
    CHECK(six.lcs_dims == std::vector<int>{6, 1});
    CHECK(six.center_dim == 4);
    CHECK(six.complement_dim == 2);

    SeriesProfile ab = series_profile(LieAlgebra(4, {}));
    CHECK(ab.lcs_dims == std::vector<int>{4});
    CHECK(ab.step == 1);
    CHECK(ab.center_dim == 4);
    CHECK(ab.complement_dim == 0);
}

TEST_CASE("series profile rejects non-nilpotent algebras") {
    // sl(2): [h,e]=2e, [h,f]=-2f, [e,f]=h
    LieAlgebra::BracketMap m;
    m[{1, 2}] = {{2, Rational(2)}};
    m[{1, 3}] = {{3, Rational(-2)}};
    m[{2, 3}] = {{1, Rational(1)}};
    LieAlgebra sl2(3, m);
    CHECK(!check_jacobi(sl2).has_value());
    CHECK_THROWS_AS(series_profile(sl2), domain_error);

    // solvable but not nilpotent: [e6,e10] = e10
    LieAlgebra solv = parse_structure("(0,0,0,0,0,0,0,0,0,e^{6,10})");
    CHECK_THROWS_AS(series_profile(solv), domain_error);
}
