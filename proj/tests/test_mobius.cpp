#include <doctest.h>

#include "padic/errors.hpp"
#include "padic/mobius.hpp"
#include "padic/valuation.hpp"

using namespace padic;

namespace {

Magnitude P(unsigned long p, Rational e) { return Magnitude::power(p, e); }
ProjPoint inf() { return ProjPoint::infinity(); }

}  // namespace

TEST_CASE("chordal examples") {
    PadicContext c3(3);
    CHECK(chordal(c3, ProjPoint(0), inf()) == Magnitude::one(3));
    CHECK(chordal(c3, ProjPoint(3), ProjPoint(0)) == P(3, -1));
    CHECK(chordal(c3, ProjPoint(3), ProjPoint(9)) == P(3, -1));
    CHECK(chordal(c3, ProjPoint(Rational(1, 9)), inf()) == P(3, -2));
    CHECK(chordal(c3, ProjPoint(Rational(1, 3)), ProjPoint(Rational(1, 9))) == P(3, -1));
    CHECK(chordal(c3, inf(), inf()).is_zero());
}

TEST_CASE("cross ratio examples") {
    PadicContext c5(5);
    CHECK(cross_ratio_chordal(c5, ProjPoint(0), ProjPoint(1), inf(), ProjPoint(5)) == Magnitude::one(5));
    CHECK(cross_ratio_chordal(c5, ProjPoint(0), ProjPoint(5), inf(), ProjPoint(1)) == P(5, -1));
    CHECK(cross_ratio_chordal(c5, ProjPoint(2), ProjPoint(2), inf(), ProjPoint(5)).is_zero());
}

TEST_CASE("point parsing") {
    CHECK(parse_point("inf").is_inf());
    CHECK(parse_point("oo").is_inf());
    CHECK(parse_point("1/3") == ProjPoint(Rational(1, 3)));
    CHECK(ProjPoint::from_homogeneous(FieldElem(2), FieldElem(4)) == ProjPoint(Rational(1, 2)));
    CHECK(ProjPoint::from_homogeneous(FieldElem(2), FieldElem(0)).is_inf());
}

TEST_CASE("apply and compose examples") {
    MobiusMap t(1, 1, 0, 1), s(0, -1, 1, 0);
    CHECK(t(inf()).is_inf());
    CHECK(s(ProjPoint(0)).is_inf());
    CHECK(s(inf()) == ProjPoint(0));
    CHECK((t * t.inverse()).is_identity());
    CHECK((t * s)(ProjPoint(2)) == t(s(ProjPoint(2))));
    CHECK(parse_map("1,1;0,1") == t);
    CHECK(parse_map("2,0;0,1/2") == MobiusMap(2, 0, 0, Rational(1, 2)));
    CHECK(parse_map(s.str()) == s);
    CHECK(MobiusMap(2, 0, 0, 2).is_identity());
    CHECK_THROWS(MobiusMap(1, 2, 2, 4));
    CHECK_THROWS_AS(parse_map("1,2;3"), ParseError);
}

TEST_CASE("norm examples") {
    PadicContext c3(3);
    CHECK(norm(c3, MobiusMap()) == Magnitude::one(3));
    CHECK(norm(c3, MobiusMap(3, 0, 0, 1)) == P(3, Rational(1, 2)));
    CHECK(norm(c3, MobiusMap(0, -1, 1, 0)) == Magnitude::one(3));
    CHECK(norm(c3, MobiusMap(9, 0, 0, 9)) == Magnitude::one(3));
}

TEST_CASE("classify examples") {
    PadicContext c3(3), c5(5);
    CHECK(classify(c3, MobiusMap(1, 1, 0, 1)) == ElementClass::PARABOLIC);
    CHECK(classify(c3, MobiusMap(3, 0, 0, 1)) == ElementClass::LOXODROMIC);
    CHECK(classify(c5, MobiusMap(2, 0, 0, Rational(1, 2))) == ElementClass::TAME_ELLIPTIC);
    CHECK(classify(c3, MobiusMap(4, 0, 0, Rational(1, 4))) == ElementClass::WILD_ELLIPTIC);
    CHECK(classify(c3, MobiusMap()) == ElementClass::IDENTITY);
}

TEST_CASE("fixed_points examples") {
    PadicContext c5(5, -1);
    auto f = fixed_points(c5, MobiusMap(1, 1, 0, 1));
    REQUIRE(f.points.size() == 1);
    CHECK(f.points[0].is_inf());
    auto g = fixed_points(c5, MobiusMap(2, 0, 0, Rational(1, 2)));
    REQUIRE(g.points.size() == 2);
    auto s = fixed_points(c5, MobiusMap(0, -1, 1, 0));
    REQUIRE(s.points.size() == 2);
    MobiusMap S(0, -1, 1, 0);
    for (const auto& z : s.points) {
        CHECK(S(z) == z);
        CHECK(z.x() * z.x() == FieldElem(-1));
    }
    CHECK(fixed_points(c5, MobiusMap()).all);
    PadicContext c5r(5);
    CHECK_THROWS_AS(fixed_points(c5r, S), UnsupportedExtension);
}

TEST_CASE("lipschitz and displacement examples") {
    PadicContext c3(3);
    MobiusMap g(3, 0, 0, 1);
    CHECK(lipschitz(c3, g) == P(3, 1));
    CHECK(lipschitz(c3, MobiusMap(0, -1, 1, 0)) == Magnitude::one(3));
    auto [x, y] = lipschitz_witness(c3, g);
    CHECK(chordal(c3, g(x), g(y)) == P(3, 1) * chordal(c3, x, y));
    CHECK(displacement_gauss(c3, g) == 1);
    CHECK(displacement_gauss(c3, MobiusMap(0, -1, 1, 0)) == 0);
}

TEST_CASE("M norm examples") {
    PadicContext c3(3), c2(2);
    CHECK(M_norm(c3, MobiusMap()).is_zero());
    CHECK(M_norm(c3, MobiusMap(1, 1, 0, 1)) == Magnitude::one(3));
    CHECK(M_norm(c2, MobiusMap(1, 1, 0, 1)) == P(2, -1));
}

TEST_CASE("rho0 examples") {
    PadicContext c3(3);
    MobiusMap t(1, 1, 0, 1);
    auto r = rho0_identity(c3, t);
    CHECK(r.exact);
    CHECK(r.value == Magnitude::one(3));
    CHECK(chordal(c3, t(r.witness), r.witness) == r.value);
    auto s = rho0_identity(c3, MobiusMap(0, -1, 1, 0));
    CHECK(s.value == Magnitude::one(3));
    CHECK(rho0_identity(c3, MobiusMap()).value.is_zero());
    CHECK(rho0(c3, t, t).value.is_zero());
    CHECK(rho0(c3, t, MobiusMap()).value == Magnitude::one(3));
}

TEST_CASE("epsilon examples") {
    PadicContext c3(3);
    CHECK(epsilon(c3, MobiusMap()).is_zero());
    CHECK(epsilon1(c3, MobiusMap()).is_zero());
    CHECK(epsilon2(c3, MobiusMap()).is_zero());
    CHECK_THROWS_AS(epsilon(c3, MobiusMap(1, 1, 0, 1)), UnsupportedExtension);
    PadicContext c3w(3, -3);
    CHECK(epsilon(c3w, MobiusMap(1, 1, 0, 1)) <= Magnitude::one(3));
}

TEST_CASE("unitary examples") {
    PadicContext c3(3);
    CHECK(is_unitary(c3, MobiusMap(0, -1, 1, 0)));
    CHECK_FALSE(is_unitary(c3, MobiusMap(3, 0, 0, 1)));
    CHECK(has_good_reduction(c3, MobiusMap(1, 1, 0, 1)));
}

TEST_CASE("d_to_unitary examples") {
    PadicContext c3(3);
    CHECK(d_to_unitary(c3, MobiusMap(0, -1, 1, 0)).is_zero());
    CHECK(d_to_unitary(c3, MobiusMap(3, 0, 0, 1)) == Magnitude::one(3));
}

TEST_CASE("three point examples") {
    ProjPoint z0(0), z1(1);
    CHECK(mobius_through_three_points(z0, z1, inf(), z0, z1, inf()).is_identity());
    MobiusMap inv = mobius_through_three_points(z0, z1, inf(), inf(), z1, z0);
    CHECK(inv == MobiusMap(0, 1, 1, 0));
    MobiusMap sh = mobius_through_three_points(z0, z1, inf(), ProjPoint(1), ProjPoint(2), inf());
    CHECK(sh == MobiusMap(1, 1, 0, 1));
}
