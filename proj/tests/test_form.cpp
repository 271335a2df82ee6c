#include <catch2/catch_amalgamated.hpp>
#include <gagc/form.hpp>
#include <gagc/matrix.hpp>

#include "oracles.hpp"

using namespace gagc;

TEST_CASE("form parsing and evaluation") {
    const Field* f16 = build_tower(2, {4}).top();
    Form h = parse_form(f16, "x^5 + y^4*z + y*z^4");
    REQUIRE(h.is_homogeneous());
    REQUIRE(h.degree() == 5);
    REQUIRE(h.terms().size() == 3);
    REQUIRE(h.leading_mono() == Mono{0, 4, 1});

    // (0:1:0) lies on the curve, (1:1:1) does not (1 + 1 + 1 = 1)
    REQUIRE(f16->v_is_zero(h.eval(f16, f16->zero(), f16->one(), f16->zero())));
    REQUIRE_FALSE(f16->v_is_zero(h.eval(f16, f16->one(), f16->one(), f16->one())));

    Form g = parse_form(f16, "x^2 - y*z");
    REQUIRE(g.terms().size() == 2);  // char 2 minus == plus
    REQUIRE_THROWS_AS(parse_form(f16, "x + w"), std::invalid_argument);

    // implicit multiplication and explicit '*' agree
    REQUIRE(parse_form(f16, "y^4z") == parse_form(f16, "y^4 * z"));
}

TEST_CASE("univariate parser round trip") {
    const Field* f16 = build_tower(2, {4}).top();
    UniPoly f = parse_unipoly(f16, "x^5+x^3+x");
    REQUIRE(f.degree() == 5);
    REQUIRE(f.to_string() == "x^5+x^3+x");
    UniPoly g = parse_unipoly(f16, "7*x^2 + 3");
    REQUIRE(f16->encode(g.coeff(2)) == 7);
    REQUIRE(f16->encode(g.coeff(0)) == 3);
}

TEST_CASE("form partials in characteristic 2") {
    const Field* f16 = build_tower(2, {4}).top();
    Form h = parse_form(f16, "x^5 + y^4*z + y*z^4");
    REQUIRE(h.partial(0) == parse_form(f16, "x^4"));
    REQUIRE(h.partial(1) == parse_form(f16, "z^4"));
    REQUIRE(h.partial(2) == parse_form(f16, "y^4"));
}

TEST_CASE("dehomogenization charts") {
    const Field* f16 = build_tower(2, {4}).top();
    Form h = parse_form(f16, "x^5 + y^4*z + y*z^4");
    BiPoly affine = dehomogenize(h, 2);  // z = 1
    REQUIRE(affine.deg_y() == 4);
    REQUIRE(affine.deg_x() == 5);
    // f(x, y) = x^5 + y^4 + y
    REQUIRE(affine.row(0) == parse_unipoly(f16, "x^5"));
    REQUIRE(affine.row(1) == parse_unipoly(f16, "1"));
    REQUIRE(affine.row(4) == parse_unipoly(f16, "1"));

    BiPoly inf = dehomogenize(h, 1);  // y = 1; variables (x, z) -> (x, y)
    // x^5 + z + z^4
    REQUIRE(inf.row(0) == parse_unipoly(f16, "x^5"));
    REQUIRE(inf.row(1) == UniPoly::one(f16));
    REQUIRE(inf.row(4) == UniPoly::one(f16));
}

TEST_CASE("resultant against common zeros") {
    const Field* f16 = build_tower(2, {4}).top();
    // Res_y(y - x, y - x^2) vanishes exactly where x = x^2
    BiPoly a(f16, {parse_unipoly(f16, "x"), UniPoly::one(f16)});    // y + x (char 2)
    BiPoly b(f16, {parse_unipoly(f16, "x^2"), UniPoly::one(f16)});  // y + x^2
    UniPoly r = resultant_y(a, b);
    REQUIRE(r.monic() == parse_unipoly(f16, "x^2+x").monic());

    // identical inputs share a factor; the resultant is identically zero
    Form h = parse_form(f16, "x^5 + y^4*z + y*z^4");
    BiPoly f = dehomogenize(h, 2);
    REQUIRE(resultant_y(f, f).is_zero());
}

TEST_CASE("resultant of the affine model with lines matches Sylvester") {
    const Field* f16 = build_tower(2, {4}).top();
    Form h = parse_form(f16, "x^5 + y^4*z + y*z^4");
    BiPoly f = dehomogenize(h, 2);
    for (std::uint64_t ci : {0ULL, 1ULL, 5ULL, 9ULL}) {
        // line y = c: as BiPoly, y + c
        BiPoly line(f16, {UniPoly::constant(f16, f16->decode(ci)), UniPoly::one(f16)});
        UniPoly r = resultant_y(f, line);
        REQUIRE(r.degree() == 5);
        // Sylvester oracle per evaluation point, on the specialized polynomials
        for (std::uint64_t xi = 0; xi < 16; ++xi) {
            cvec x0 = f16->decode(xi);
            cvec direct = oracle::sylvester_resultant(f.eval_x(f16, x0), line.eval_x(f16, x0));
            REQUIRE(r.eval(x0) == direct);
        }
    }
}

TEST_CASE("resultant vanishes iff common y-factor on constructed cases") {
    const Field* f4 = build_tower(2, {2}).top();
    BiPoly common(f4, {parse_unipoly(f4, "x^2+x"), UniPoly::one(f4)});  // y + x^2 + x
    BiPoly p(f4, {parse_unipoly(f4, "x"), UniPoly::one(f4)});
    BiPoly q(f4, {parse_unipoly(f4, "x^3+1"), UniPoly::one(f4)});
    auto mul = [&](const BiPoly& A, const BiPoly& B) {
        std::vector<UniPoly> rows(static_cast<std::size_t>(A.deg_y() + B.deg_y()) + 1, UniPoly::zero(f4));
        for (int i = 0; i <= A.deg_y(); ++i)
            for (int j = 0; j <= B.deg_y(); ++j) rows[i + j] = rows[i + j] + A.row(i) * B.row(j);
        return BiPoly(f4, std::move(rows));
    };
    REQUIRE(resultant_y(mul(common, p), mul(common, q)).is_zero());
    REQUIRE_FALSE(resultant_y(mul(common, p), q).is_zero());
}

TEST_CASE("odd characteristic resultant sign matches Sylvester") {
    const Field* f9 = build_tower(3, {2}).top();
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        auto rnd_poly = [&](int deg) {
            std::vector<cvec> c;
            for (int i = 0; i < deg; ++i) c.push_back(f9->decode(rng() % 9));
            c.push_back(f9->decode(1 + rng() % 8));
            return UniPoly(f9, std::move(c));
        };
        UniPoly f = rnd_poly(3), g = rnd_poly(2);
        REQUIRE(resultant_uni(f, g) == oracle::sylvester_resultant(f, g));
    }
}

TEST_CASE("matrix rank, kernel and row spaces") {
    const Field* f16 = build_tower(2, {4}).top();
    Mat m(f16, 3, 5);
    std::mt19937_64 rng(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 5; ++j) m.at(i, j) = static_cast<fidx>(rng() % 16);
    auto kern = m.kernel_basis();
    REQUIRE(m.rank() + kern.size() == 5);
    for (const auto& v : kern) {
        for (std::size_t i = 0; i < 3; ++i) {
            fidx acc = 0;
            for (std::size_t j = 0; j < 5; ++j) acc = f16->add(acc, f16->mul(m.at(i, j), v[j]));
            REQUIRE(acc == 0);
        }
    }
    Mat id = Mat::identity(f16, 4);
    REQUIRE(id.rank() == 4);
    REQUIRE(id.row_space_equal(Mat::identity(f16, 4)));
}
