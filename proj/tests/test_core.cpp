#include <doctest.h>

#include <random>

#include "padic/errors.hpp"
#include "padic/valuation.hpp"

using namespace padic;

namespace {

Magnitude P(unsigned long p, Rational e) { return Magnitude::power(p, e); }

}  // namespace

TEST_CASE("vp examples") {
    CHECK(*vp(Rational(9, 2), 3) == 2);
    CHECK(*vp(Rational(1), 5) == 0);
    CHECK_FALSE(vp(Rational(0), 7).has_value());
    CHECK(*vp(Rational(-5, 50), 5) == -1);
}

TEST_CASE("abs_elem examples") {
    PadicContext c3(3, -3);
    CHECK(abs_elem(c3, sqrt_disc(-3)) == P(3, Rational(-1, 2)));
    PadicContext c5(5, -1);
    CHECK(c5.split());
    CHECK(abs_elem(c5, FieldElem(1, 1, -1)) == Magnitude::one(5));
    CHECK(abs_elem(c5, FieldElem(0)).is_zero());
    // 2 + i is divisible by the prime above 5 picked by the root s = 2 mod 5? s = 2: 2 + 2 = 4, a unit.
    CHECK(abs_elem(c5, FieldElem(2, 1, -1)) == Magnitude::one(5));
    // s = 2: -2 + s = 0 mod 5, and (-2+i)(-2-i) = 5, so |-2 + i| = 1/5 under this embedding.
    CHECK(abs_elem(c5, FieldElem(-2, 1, -1)) == P(5, -1));
    CHECK(abs_elem(c5, FieldElem(2, 1, -1) * FieldElem(-2, 1, -1)) == P(5, -1));
}

TEST_CASE("compare_magnitude examples") {
    CHECK(P(3, Rational(-1, 2)) > Magnitude::real(3, Rational(1, 2)));
    CHECK(Magnitude::one(7) == Magnitude::one(7));
    CHECK(Magnitude::real(7, 6) * P(7, -2) < Magnitude::one(7));
    CHECK(Magnitude::zero(7) < P(7, -100));
    CHECK(Magnitude::real(3, 6) == Magnitude::real(3, 2) * P(3, 1));
}

TEST_CASE("sqrt_in_Qp examples") {
    auto s = sqrt_in_Qp(Rational(-1), 5);
    REQUIRE(s.square);
    CHECK(s.root->residue(1) == 2);
    Integer r = s.root->residue(20);
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), 5, 20);
    CHECK((r * r + 1) % m == 0);
    CHECK_FALSE(sqrt_in_Qp(Rational(3), 3).square);
    auto t = sqrt_in_Qp(Rational(17), 2);
    REQUIRE(t.square);
    Integer r2 = t.root->residue(30);
    Integer m2;
    mpz_ui_pow_ui(m2.get_mpz_t(), 2, 30);
    CHECK((r2 * r2 - 17) % m2 == 0);
    Integer r8 = t.root->residue(3);
    CHECK((r8 == 1 || r8 == 3));
    CHECK_FALSE(sqrt_in_Qp(Rational(5), 2).square);
    CHECK(sqrt_in_Qp(Rational(9, 4), 7).square);
    CHECK_FALSE(sqrt_in_Qp(Rational(3), 5).square);
}

TEST_CASE("Hensel digits are stable across precisions") {
    auto s = sqrt_in_Qp(Rational(-1), 5);
    auto d1 = s.root->digits(5);
    auto d2 = s.root->digits(40);
    for (int i = 0; i < 5; ++i) CHECK(d1[i] == d2[i]);
}

TEST_CASE("cyclotomic_valuation examples") {
    CHECK(cyclotomic_valuation(3, 3) == P(3, Rational(-1, 2)));
    CHECK(cyclotomic_valuation(3, 2) == Magnitude::one(3));
    CHECK(cyclotomic_valuation(2, 4) == P(2, Rational(-1, 2)));
    CHECK(cyclotomic_valuation(2, 6) == Magnitude::one(2));
    CHECK(cyclotomic_valuation(5, 5) == P(5, Rational(-1, 4)));
}

TEST_CASE("cyclotomic_valuation increases toward 1") {
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        unsigned long d = p;
        Magnitude prev = cyclotomic_valuation(p, d);
        for (int k = 2; k < 6; ++k) {
            d *= p;
            Magnitude cur = cyclotomic_valuation(p, d);
            CHECK(prev < cur);
            CHECK(cur < Magnitude::one(p));
            prev = cur;
        }
    }
}

TEST_CASE("field parsing and printing") {
    CHECK(parse_field("3/4") == FieldElem(Rational(3, 4)));
    CHECK(parse_field("1+2*sqrt(-3)") == FieldElem(1, 2, -3));
    CHECK(parse_field("-1/2-sqrt(5)") == FieldElem(Rational(-1, 2), -1, 5));
    CHECK(parse_field("sqrt(-1)") == sqrt_disc(-1));
    CHECK(parse_field("-3*sqrt(2)") == FieldElem(0, -3, 2));
    for (const auto& x : {FieldElem(1, 2, -3), FieldElem(Rational(-1, 2), -1, 5), FieldElem(7), sqrt_disc(-1)}) {
        CHECK(parse_field(x.str()) == x);
    }
    CHECK_THROWS_AS(parse_field("1/0"), ParseError);
    CHECK_THROWS_AS(parse_field("abc"), ParseError);
}

TEST_CASE("field arithmetic") {
    FieldElem x(1, 2, -3), y(Rational(1, 3), -1, -3);
    CHECK((x * y) / y == x);
    CHECK(x - x == FieldElem(0));
    CHECK((x * x.conj()).is_rational());
    CHECK_THROWS_AS(FieldElem(0, 1, 2) + FieldElem(0, 1, 3), UnsupportedExtension);
}

TEST_CASE("sqrt_field") {
    PadicContext ctx(5, -1);
    auto r = sqrt_field(ctx, FieldElem(-4));
    REQUIRE(r);
    CHECK(*r * *r == FieldElem(-4));
    FieldElem z(3, 2, -1);
    auto s = sqrt_field(ctx, z * z);
    REQUIRE(s);
    CHECK(*s * *s == z * z);
    CHECK_FALSE(sqrt_field(ctx, FieldElem(2)).has_value());
    CHECK_THROWS_AS(require_sqrt(ctx, FieldElem(2), "test"), UnsupportedExtension);
    try {
        require_sqrt(ctx, FieldElem(8), "test");
    } catch (const UnsupportedExtension& e) {
        CHECK(e.needed_disc() == 2);
    }
}

TEST_CASE("context validation") {
    CHECK_THROWS_AS(PadicContext(4), InvalidContext);
    CHECK_THROWS_AS(PadicContext(3, 4), InvalidContext);
    CHECK_THROWS_AS(PadicContext(3, 1), InvalidContext);
    CHECK_NOTHROW(PadicContext(3, -1));
}

TEST_CASE("magnitude parse round trip") {
    Magnitude m = Magnitude::real(3, Rational(2, 5)) * Magnitude::power(3, Rational(-1, 2));
    CHECK(parse_magnitude(m.str(), 3) == m);
    CHECK(parse_magnitude("0", 3).is_zero());
}

TEST_CASE("split valuation guard") {
    PadicContext ctx(5, -1, 3);
    CHECK_NOTHROW(abs_elem(ctx, FieldElem(-2, 1, -1)));
    // (-2 + i)^4 has valuation 4 > cap 3 under this embedding.
    FieldElem w = FieldElem(-2, 1, -1);
    CHECK_THROWS_AS(abs_elem(ctx, w * w * w * w), PrecisionExhausted);
}
