#include <catch2/catch_amalgamated.hpp>
#include <gagc/field.hpp>
#include <gagc/poly.hpp>

#include "oracles.hpp"

using namespace gagc;

TEST_CASE("tower construction is deterministic and canonical") {
    auto t4 = build_tower(2, {2});
    REQUIRE(t4.top()->size() == 4);
    // the only monic irreducible quadratic over F_2 is s^2+s+1
    REQUIRE(t4.top()->modulus() == std::vector<fidx>{1, 1, 1});

    auto t16 = build_tower(2, {4});
    REQUIRE(t16.top()->size() == 16);
    // oracle: scan the 16 monic quartics in canonical order with trial division
    const Field* f2 = Field::prime(2);
    std::vector<fidx> expected;
    for (const auto& f : oracle::monic_polys(f2, 4)) {
        if (oracle::irreducible_by_trial_division(f)) {
            for (int i = 0; i <= f.degree(); ++i) expected.push_back(static_cast<fidx>(f2->encode(f.coeff(i))));
            break;
        }
    }
    REQUIRE(t16.top()->modulus() == expected);

    // rebuilding gives the identical interned object
    auto again = build_tower(2, {4});
    REQUIRE(again.top() == t16.top());

    auto t4096 = build_tower(2, {4, 3});
    REQUIRE(t4096.top()->size() == 4096);
    REQUIRE(t4096.top()->base() == t16.top());

    REQUIRE_THROWS_AS(build_tower(4, {2}), std::invalid_argument);
    REQUIRE_THROWS_AS(build_tower(2, {0}), std::invalid_argument);
}

TEST_CASE("field axioms and characteristic-2 arithmetic") {
    const Field* f16 = build_tower(2, {4}).top();
    for (std::uint64_t i = 0; i < 16; ++i) {
        Element a = Element::from_int(f16, i);
        REQUIRE((a + a).is_zero());
        if (!a.is_zero()) {
            REQUIRE((a * (Element::one(f16) / a)).is_one());
            REQUIRE(a.pow(15).is_one());
        }
    }
    // distributivity spot checks across all pairs
    for (std::uint64_t i = 0; i < 16; ++i)
        for (std::uint64_t j = 0; j < 16; ++j) {
            Element a = Element::from_int(f16, i), b = Element::from_int(f16, j);
            Element c = Element::from_int(f16, (i * 7 + j + 3) % 16);
            REQUIRE((a + b) * c == a * c + b * c);
        }
    REQUIRE_THROWS_AS(Element::one(f16) / Element::zero(f16), std::domain_error);
}

TEST_CASE("frobenius is the q-power automorphism") {
    const Field* f16 = build_tower(2, {4}).top();
    const Field* f256 = Field::extension(f16, 2);

    // elements of the base are fixed
    for (std::uint64_t i = 0; i < 16; ++i) {
        Element a = embed_up(Element::from_int(f16, i), f256);
        REQUIRE(frobenius(a) == a);
    }
    // applying l times is the identity; orbit of a non-subfield element has size 2
    Element beta = Element::from_int(f256, 16);  // first element outside the F16 image
    Element b1 = frobenius(beta);
    REQUIRE(b1 != beta);
    REQUIRE(frobenius(b1) == beta);

    // automorphism on random pairs
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 64; ++trial) {
        Element a = Element::from_int(f256, rng() % 256);
        Element b = Element::from_int(f256, rng() % 256);
        REQUIRE(frobenius(a + b) == frobenius(a) + frobenius(b));
        REQUIRE(frobenius(a * b) == frobenius(a) * frobenius(b));
    }
}

TEST_CASE("fixed field of frobenius is exactly the embedded base") {
    const Field* f16 = build_tower(2, {4}).top();
    const Field* f256 = Field::extension(f16, 2);
    std::set<std::uint64_t> fixed, embedded;
    for (std::uint64_t i = 0; i < 256; ++i) {
        Element a = Element::from_int(f256, i);
        if (frobenius(a) == a) fixed.insert(i);
    }
    for (std::uint64_t i = 0; i < 16; ++i) embedded.insert(embed_up(Element::from_int(f16, i), f256).code());
    REQUIRE(fixed == embedded);
}

TEST_CASE("pi expansion is linear, bijective and inverse to contraction") {
    const Field* f16 = build_tower(2, {4}).top();
    const Field* top = Field::extension(f16, 2);

    REQUIRE(pi_expand(Element::zero(top)) == std::vector<Element>{Element::zero(f16), Element::zero(f16)});
    REQUIRE(pi_expand(Element::one(top)) == std::vector<Element>{Element::one(f16), Element::zero(f16)});

    // pi_2(a*g1 + b*g2) = (a, b) for the power basis (g1, g2) = (1, u)
    Element u = Element::from_int(top, 16);
    for (std::uint64_t ai = 0; ai < 16; ++ai)
        for (std::uint64_t bi = 0; bi < 16; ++bi) {
            Element a = Element::from_int(f16, ai), b = Element::from_int(f16, bi);
            Element beta = embed_up(a, top) + embed_up(b, top) * u;
            auto coords = pi_expand(beta);
            REQUIRE(coords == std::vector<Element>{a, b});
            REQUIRE(pi_contract(top, coords) == beta);
        }

    // round trip on every element, and linearity on samples
    std::set<std::vector<std::uint64_t>> images;
    for (std::uint64_t i = 0; i < 256; ++i) {
        Element beta = Element::from_int(top, i);
        auto coords = pi_expand(beta);
        REQUIRE(pi_contract(top, coords) == beta);
        images.insert({coords[0].code(), coords[1].code()});
    }
    REQUIRE(images.size() == 256);
}

TEST_CASE("element encodings and tower levels") {
    auto tower = build_tower(2, {4, 3});
    const Field* top = tower.top();
    REQUIRE(top->degree_over_prime() == 12);
    REQUIRE(top->describe().substr(0, 8) == "GF(2^12)");
    Element e = Element::from_int(top, 1234);
    REQUIRE(e.code() == 1234);
    REQUIRE_THROWS_AS(Element::from_int(top, 4096), std::invalid_argument);

    const Field* f16 = tower.levels[1];
    REQUIRE(f16->describe() == "GF(2^4) poly=1,0,0,1,1");
}

TEST_CASE("discrete logs and primitive elements") {
    const Field* f16 = build_tower(2, {4}).top();
    fidx g = f16->primitive_element();
    std::set<fidx> powers;
    for (int i = 0; i < 15; ++i) powers.insert(f16->pow(g, i));
    REQUIRE(powers.size() == 15);
    for (fidx a = 1; a < 16; ++a) {
        REQUIRE(f16->pow(g, f16->discrete_log(a)) == a);
    }

    const Field* f4096 = Field::extension(f16, 3);
    fidx h = f4096->primitive_element();
    REQUIRE(f4096->pow(h, 4095) == 1);
    REQUIRE(f4096->pow(h, 4095 / 3) != 1);
    REQUIRE(f4096->pow(h, 4095 / 5) != 1);
    REQUIRE(f4096->pow(h, 4095 / 7) != 1);
    REQUIRE(f4096->pow(h, 4095 / 13) != 1);
}

TEST_CASE("odd characteristic sanity") {
    const Field* f9 = build_tower(3, {2}).top();
    REQUIRE(f9->size() == 9);
    for (std::uint64_t i = 0; i < 9; ++i) {
        Element a = Element::from_int(f9, i);
        REQUIRE((a + (-a)).is_zero());
        if (!a.is_zero()) REQUIRE(a.pow(8).is_one());
    }
}
