#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genera/errors.hpp"
#include "genera/laurent.hpp"
#include "genera/localized.hpp"
#include "genera/oracles.hpp"
#include "genera/series.hpp"

using namespace genera;

namespace {
LaurentPoly L(const std::string& s) { return LaurentPoly::parse(s); }
BiLaurentPoly B(const std::string& s) { return BiLaurentPoly::parse(s); }
}  // namespace

TEST_CASE("laurent arithmetic examples") {
    CHECK(L("1 - y") + L("1 - y") == L("2 - 2*y"));
    CHECK(B("1 + u*v") * B("1") == B("1 + u*v"));
    CHECK(L("1 - y") * L("1 + y") == L("1 - y^2"));
    CHECK(L("3/2*y^-1") == LaurentPoly::monomial(Rational(3, 2), -1));
    CHECK((L("1 - y") - L("1 - y")).is_zero());
}

TEST_CASE("specialize_uv examples") {
    CHECK(specialize_uv(B("1 + u*v")) == L("1 - y"));
    CHECK(specialize_uv(B("1")) == L("1"));
    CHECK(specialize_uv(B("u^2*v^2 + u*v + 1")) == L("y^2 - y + 1"));
    CHECK(specialize_uv(B("u^-1*v")) == L("-y^-1"));
}

TEST_CASE("commutative ring axioms on random inputs") {
    oracle::Rng rng(17);
    for (int i = 0; i < 60; ++i) {
        LaurentPoly a = rng.laurent(), b = rng.laurent(), c = rng.laurent();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * LaurentPoly::one() == a);
        CHECK((a + LaurentPoly::zero()) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("specialize_uv is a ring homomorphism") {
    oracle::Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        BiLaurentPoly p, q;
        for (int t = rng.uniform(0, 4); t > 0; --t)
            p += BiLaurentPoly::monomial(rng.rational(), rng.uniform(-3, 3), rng.uniform(-3, 3));
        for (int t = rng.uniform(0, 4); t > 0; --t)
            q += BiLaurentPoly::monomial(rng.rational(), rng.uniform(-3, 3), rng.uniform(-3, 3));
        CHECK(specialize_uv(p * q) == specialize_uv(p) * specialize_uv(q));
        CHECK(specialize_uv(p + q) == specialize_uv(p) + specialize_uv(q));
    }
}

TEST_CASE("evaluation") {
    CHECK(L("1 - 2*y + y^2").eval(1) == 0);
    CHECK(L("1 - 2*y + y^2").eval(-1) == 4);
    CHECK(L("3/2*y^-1").eval(Rational(1, 2)) == 3);
    CHECK_THROWS_AS(L("y^-1").eval(0), arithmetic_error);
}

TEST_CASE("localized reduction examples") {
    CHECK(LocalizedElem(L("1 - y^2"), 1) == LocalizedElem(L("1 - y")));
    CHECK(LocalizedElem(L("1 + 2*y + y^2"), 1) == LocalizedElem(L("1 + y")));
    CHECK(LocalizedElem(L("1")) + LocalizedElem(L("y")) == LocalizedElem(L("1 + y")));
    // Reduction normalizes zero completely.
    CHECK(LocalizedElem(LaurentPoly::zero(), 3) == LocalizedElem::zero());
    // Idempotent: building from already-reduced parts does not change them.
    LocalizedElem e(L("1 - y"), 2);
    CHECK(LocalizedElem(e.num(), e.denom_pow()) == e);
}

TEST_CASE("localized arithmetic stays reduced") {
    oracle::Rng rng(31);
    for (int i = 0; i < 80; ++i) {
        LocalizedElem a(rng.laurent(), static_cast<unsigned>(rng.uniform(0, 3)));
        LocalizedElem b(rng.laurent(), static_cast<unsigned>(rng.uniform(0, 3)));
        for (const LocalizedElem& r : {a + b, a * b, a - b}) {
            if (r.denom_pow() == 0) continue;
            LaurentPoly q;
            CHECK_FALSE(divide_by_one_plus_y(r.num(), q));
        }
        CHECK((a + b) * (a + b) == a * a + a * b + a * b + b * b);
    }
}

TEST_CASE("qy series low order") {
    PowerSeries s = qy_series(1);
    CHECK(s.coeffs.size() == 2);
    CHECK(s.coeff(0) == L("1"));
    CHECK(s.coeff(1) == L("1/2 - 1/2*y"));
}

TEST_CASE("qy series y=0 gives the Todd expansion") {
    auto vals = qy_series(6).eval_y(0);
    auto expect = oracle::todd_by_inversion(6);
    for (unsigned m = 0; m <= 6; ++m) CHECK(vals[m] == expect[m]);
    CHECK(vals[0] == Rational(1));
    CHECK(vals[1] == Rational(1, 2));
    CHECK(vals[2] == Rational(1, 12));
    CHECK(vals[3] == Rational(0));
    CHECK(vals[4] == Rational(-1, 720));
}

TEST_CASE("qy series y=-1 collapses to 1 + a") {
    auto vals = qy_series(6).eval_y(-1);
    CHECK(vals[0] == Rational(1));
    CHECK(vals[1] == Rational(1));
    for (unsigned m = 2; m <= 6; ++m) CHECK(vals[m] == Rational(0));
}

TEST_CASE("qy series y=1 gives a/tanh(a)") {
    auto vals = qy_series(6).eval_y(1);
    auto expect = oracle::x_over_tanh(6);
    for (unsigned m = 0; m <= 6; ++m) CHECK(vals[m] == expect[m]);
    CHECK(vals[0] == Rational(1));
    CHECK(vals[1] == Rational(0));
    CHECK(vals[2] == Rational(1, 3));
    CHECK(vals[3] == Rational(0));
    CHECK(vals[4] == Rational(-1, 45));
}

TEST_CASE("print/parse round trip is the identity") {
    oracle::Rng rng(41);
    for (int i = 0; i < 80; ++i) {
        LaurentPoly p = rng.laurent();
        p += LaurentPoly::monomial(rng.rational(), rng.uniform(-4, 4));
        CHECK(LaurentPoly::parse(p.to_string()) == p);

        BiLaurentPoly q;
        for (int t = rng.uniform(0, 5); t > 0; --t)
            q += BiLaurentPoly::monomial(rng.rational(), rng.uniform(-3, 3), rng.uniform(-3, 3));
        CHECK(BiLaurentPoly::parse(q.to_string()) == q);

        LocalizedElem e(p, static_cast<unsigned>(rng.uniform(0, 3)));
        CHECK(LocalizedElem::parse(e.to_string()) == e);
    }
}

TEST_CASE("canonical printing") {
    CHECK(L("1 - 2*y + y^2").to_string() == "y^2 - 2*y + 1");
    CHECK(L("0").to_string() == "0");
    CHECK(LaurentPoly::zero().to_string() == "0");
    CHECK(L("-y").to_string() == "-y");
    CHECK(L("3/2*y^-1 + y").to_string() == "y + 3/2*y^-1");
    CHECK(B("1 + u*v + u^2*v^2").to_string() == "u^2*v^2 + u*v + 1");
    CHECK(B("v^2 + u^2").to_string() == "u^2 + v^2");
    CHECK(LocalizedElem(L("1 - y"), 2).to_string() == "(-y + 1)/(1+y)^2");
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(LaurentPoly::parse(""), parse_error);
    CHECK_THROWS_AS(LaurentPoly::parse("1 + u"), parse_error);
    CHECK_THROWS_AS(LaurentPoly::parse("1/0"), parse_error);
    CHECK_THROWS_AS(BiLaurentPoly::parse("u + w"), parse_error);
    CHECK_THROWS_AS(LaurentPoly::parse("1 +"), parse_error);
}
