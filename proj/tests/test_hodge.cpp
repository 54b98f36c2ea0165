#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genera/errors.hpp"
#include "genera/hodge.hpp"
#include "genera/oracles.hpp"

using namespace genera;

namespace {
HodgeClass H(const std::string& s) { return HodgeClass::parse(s); }
}  // namespace

TEST_CASE("e_poly examples") {
    CHECK(e_poly(H("0,0:1")) == BiLaurentPoly::parse("1"));
    CHECK(e_poly(H("1,1:1")) == BiLaurentPoly::parse("u*v"));
    CHECK(e_poly(H("0,0:1; 1,1:1")) == BiLaurentPoly::parse("1 + u*v"));
    CHECK(e_poly(HodgeClass::zero()).is_zero());
}

TEST_CASE("chi_y examples") {
    CHECK(chi_y_class(H("0,0:1")) == LaurentPoly::parse("1"));
    CHECK(chi_y_class(H("0,0:1; 1,1:1")) == LaurentPoly::parse("1 - y"));
    CHECK(chi_y_class(H("0,0:1; 1,1:1; 2,2:1")) == LaurentPoly::parse("1 - y + y^2"));
    CHECK(chi_y_class(H("-1,0:2")) == LaurentPoly::parse("-2*y^-1"));
}

TEST_CASE("tensor examples") {
    HodgeClass h = H("0,0:1; 1,1:3; 2,-1:-2");
    CHECK(HodgeClass::one() * h == h);
    CHECK(H("1,1:1") * H("1,1:1") == H("2,2:1"));
}

TEST_CASE("e and chi are ring homomorphisms") {
    oracle::Rng rng(7);
    for (int i = 0; i < 60; ++i) {
        HodgeClass a = rng.hodge(), b = rng.hodge();
        CHECK(e_poly(a * b) == e_poly(a) * e_poly(b));
        CHECK(e_poly(a + b) == e_poly(a) + e_poly(b));
        CHECK(chi_y_class(a * b) == chi_y_class(a) * chi_y_class(b));
        CHECK(chi_y_class(a + b) == chi_y_class(a) + chi_y_class(b));
        // chi factors through E.
        CHECK(chi_y_class(a) == specialize_uv(e_poly(a)));
    }
}

TEST_CASE("chi at y=-1 is the Euler characteristic") {
    oracle::Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        HodgeClass a = rng.hodge();
        Rational total = 0;
        for (const auto& [k, m] : a.table()) total += Rational(m);
        CHECK(chi_y_class(a).eval(-1) == total);
    }
}

TEST_CASE("hodge class text syntax") {
    CHECK(H("0,0:1; 1,1:1").to_string() == "0,0:1; 1,1:1");
    CHECK(HodgeClass::parse("  1 , 1 : -3 ;  -2,0:5 ").to_string() == "-2,0:5; 1,1:-3");
    CHECK(HodgeClass::parse("0").is_zero());
    CHECK(HodgeClass::parse(H("2,-3:7").to_string()) == H("2,-3:7"));
    CHECK_THROWS_AS(HodgeClass::parse(""), parse_error);
    CHECK_THROWS_AS(HodgeClass::parse("1,1"), parse_error);
    CHECK_THROWS_AS(HodgeClass::parse("1;2"), parse_error);
    // Entries at the same bigrade accumulate; cancellation is canonical.
    CHECK(HodgeClass::parse("0,0:2; 0,0:-2").is_zero());
}
