#include <doctest.h>

#include "padic/errors.hpp"
#include "padic/geometry.hpp"
#include "padic/valuation.hpp"

using namespace padic;

namespace {

ProjPoint inf() { return ProjPoint::infinity(); }
BerkPoint D(const FieldElem& c, Rational s) { return BerkPoint::disk(c, s); }

bool same_endpoints(const Geodesic& A, const ProjPoint& x, const ProjPoint& y) {
    return same_geodesic(A, Geodesic{x, y});
}

}  // namespace

TEST_CASE("axis examples") {
    PadicContext c5(5);
    CHECK(same_endpoints(axis(c5, MobiusMap(3, 0, 0, Rational(1, 3))), ProjPoint(0), inf()));
    MobiusMap T(1, 1, 0, 1);
    MobiusMap g = T.inverse() * MobiusMap(3, 0, 0, Rational(1, 3)) * T;
    CHECK(same_endpoints(axis(c5, g), ProjPoint(-1), inf()));
    CHECK_THROWS_AS(axis(c5, T), WrongClass);
}

TEST_CASE("involution examples") {
    CHECK(involution_with_fixed_points(ProjPoint(0), inf()) == MobiusMap(-1, 0, 0, 1));
    CHECK(involution_with_fixed_points(ProjPoint(1), ProjPoint(-1)) == MobiusMap(0, 1, 1, 0));
    MobiusMap f = involution_with_fixed_points(ProjPoint(0), ProjPoint(1));
    CHECK(f(ProjPoint(0)) == ProjPoint(0));
    CHECK(f(ProjPoint(1)) == ProjPoint(1));
    CHECK((f * f).is_identity());
    CHECK(is_involution(f));
}

TEST_CASE("factor_involutions examples") {
    PadicContext c3(3);
    auto [f, h] = factor_involutions(c3, MobiusMap(1, 1, 0, 1));
    CHECK(f == MobiusMap(-1, 0, 0, 1));
    CHECK(h == MobiusMap(-1, -1, 0, 1));
    auto [f2, h2] = factor_involutions(c3, MobiusMap(4, 0, 0, 1));
    CHECK(f2 == MobiusMap(0, -4, 1, 0));
    CHECK(h2 == MobiusMap(0, -1, 1, 0));
    for (const auto& g : {MobiusMap(5, -4, 4, -3), MobiusMap(3, 0, 1, 1), MobiusMap(1, 5, 0, 2)}) {
        auto pr = factor_involutions(c3, g);
        CHECK(pr.f * pr.h == g);
        CHECK(is_involution(pr.f));
        CHECK(is_involution(pr.h));
    }
}

TEST_CASE("is_orthogonal examples") {
    PadicContext c3(3);
    Geodesic A{ProjPoint(0), inf()};
    CHECK(is_orthogonal(c3, A, Geodesic{ProjPoint(-1), ProjPoint(1)}));
    CHECK_FALSE(is_orthogonal(c3, A, Geodesic{ProjPoint(1), ProjPoint(2)}));
    CHECK_FALSE(is_orthogonal(c3, A, A));
}

TEST_CASE("common_perpendicular examples") {
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        PadicContext ctx(p);
        long pl = static_cast<long>(p);
        Geodesic A{ProjPoint(0), inf()};
        Geodesic B{ProjPoint(pl), ProjPoint(Rational(1, pl))};
        Geodesic C = common_perpendicular(ctx, A, B);
        CHECK(is_orthogonal(ctx, A, C));
        CHECK(is_orthogonal(ctx, B, C));
        if (p >= 3) CHECK(same_endpoints(C, ProjPoint(1), ProjPoint(-1)));
    }
    PadicContext c5(5);
    Geodesic A{ProjPoint(0), inf()};
    CHECK(same_endpoints(common_perpendicular(c5, A, Geodesic{ProjPoint(4), ProjPoint(9)}), ProjPoint(6),
                         ProjPoint(-6)));
    CHECK_THROWS_AS(common_perpendicular(c5, A, Geodesic{ProjPoint(0), ProjPoint(1)}), DegenerateConfiguration);
}

TEST_CASE("fixed_locus examples") {
    PadicContext c5(5), c3(3);
    FixedLocus F = fixed_locus(c5, MobiusMap(2, 0, 0, Rational(1, 2)));
    CHECK(F.kind == FixedLocus::Kind::AXIS);
    CHECK(same_endpoints(F.geodesic, ProjPoint(0), inf()));
    FixedLocus T = fixed_locus(c3, MobiusMap(4, 0, 0, Rational(1, 4)));
    CHECK(T.kind == FixedLocus::Kind::TUBE);
    CHECK(T.radius == 1);
    MobiusMap g(4, 0, 0, Rational(1, 4));
    // |a| <= 3 r exactly: D(3, 3^-1) is fixed, D(9, 3^-3) is not.
    CHECK(locus_membership(c3, g, D(FieldElem(3), -2)));
    CHECK_FALSE(locus_membership(c3, g, D(FieldElem(1), -2)));
    CHECK(locus_contains(c3, T, D(FieldElem(3), -2)));
    CHECK_FALSE(locus_contains(c3, T, D(FieldElem(1), -2)));
    FixedLocus H = fixed_locus(c3, MobiusMap(1, 1, 0, 1));
    CHECK(H.kind == FixedLocus::Kind::HOROBALL);
    CHECK(H.fixed_point.is_inf());
    CHECK(locus_contains(c3, H, BerkPoint::gauss()));
    CHECK(locus_contains(c3, H, D(FieldElem(7), 2)));
    CHECK_FALSE(locus_contains(c3, H, D(FieldElem(0), -1)));
    CHECK(fixed_locus(c3, MobiusMap(3, 0, 0, 1)).kind == FixedLocus::Kind::TWO_POINTS);
}

TEST_CASE("locus_membership examples") {
    PadicContext c5(5);
    CHECK(locus_membership(c5, MobiusMap(1, 1, 0, 1), BerkPoint::gauss()));
    CHECK_FALSE(locus_membership(c5, MobiusMap(1, 1, 0, 1), D(FieldElem(0), -1)));
    CHECK(locus_membership(c5, MobiusMap(2, 0, 0, Rational(1, 2)), D(FieldElem(0), 7)));
}

TEST_CASE("locus_intersect examples") {
    PadicContext c5(5), c3(3);
    FixedLocus A1 = fixed_locus(c5, MobiusMap(2, 0, 0, Rational(1, 2)));
    FixedLocus A2 = fixed_locus(c5, MobiusMap(0, 1, 1, 0).scaled(1) * MobiusMap(1, 0, 0, 1));
    REQUIRE(A2.kind == FixedLocus::Kind::AXIS);
    auto x = locus_intersect(c5, A1, A2);
    REQUIRE(x);
    CHECK(same_point(c5, *x, BerkPoint::gauss()));

    FixedLocus B1 = fixed_locus(c3, MobiusMap(-1, 0, 0, 1));
    FixedLocus B2 = fixed_locus(c3, involution_with_fixed_points(ProjPoint(3), ProjPoint(9)));
    REQUIRE(B1.kind == FixedLocus::Kind::AXIS);
    REQUIRE(B2.kind == FixedLocus::Kind::AXIS);
    // The axes share the segment from D(0, 3^-2) to D(0, 3^-1).
    auto m = locus_intersect(c3, B1, B2);
    REQUIRE(m);
    CHECK(locus_contains(c3, B1, *m));
    CHECK(locus_contains(c3, B2, *m));
    FixedLocus B3 = fixed_locus(c3, involution_with_fixed_points(ProjPoint(1), ProjPoint(4)));
    CHECK_FALSE(locus_intersect(c3, B1, B3).has_value());

    MobiusMap w(4, 0, 0, Rational(1, 4));
    MobiusMap v = involution_with_fixed_points(ProjPoint(3), ProjPoint(9));
    auto y = locus_intersect(c3, fixed_locus(c3, w), fixed_locus(c3, v));
    REQUIRE(y);
    CHECK(locus_membership(c3, w, *y));
    CHECK(locus_membership(c3, v, *y));
}

TEST_CASE("tailed_axis examples") {
    PadicContext c2(2), c3(3);
    TailedAxis t = tailed_axis(c2, MobiusMap(0, 1, 1, 0));
    CHECK(same_point(c2, t.tail, BerkPoint::gauss()));
    CHECK(dist_to_geodesic(c2, t.geodesic, t.tail) == 1);
    TailedAxis u = tailed_axis(c2, MobiusMap(-1, 0, 0, 1));
    CHECK(dist_to_geodesic(c2, u.geodesic, u.tail) == 1);
    CHECK(locus_membership(c2, MobiusMap(-1, 0, 0, 1), u.tail));
    CHECK_THROWS_AS(tailed_axis(c3, MobiusMap(0, 1, 1, 0)), WrongClass);
}

TEST_CASE("antipodal_witness examples") {
    PadicContext c3(3);
    auto u0 = antipodal_witness(c3, ProjPoint(0), inf());
    REQUIRE(u0);
    CHECK(u0->is_identity());
    auto u1 = antipodal_witness(c3, ProjPoint(0), ProjPoint(1));
    REQUIRE(u1);
    CHECK(is_unitary(c3, *u1));
    CHECK((*u1)(ProjPoint(0)) == ProjPoint(0));
    CHECK((*u1)(inf()) == ProjPoint(1));
    CHECK_FALSE(antipodal_witness(c3, ProjPoint(0), ProjPoint(3)).has_value());
}

TEST_CASE("decompose examples") {
    PadicContext c3(3);
    auto check = [&](const MobiusMap& g) {
        Decomposition d = decompose_unitary_loxodromic(c3, g);
        CHECK(is_unitary(c3, d.u));
        CHECK(d.u * d.f == g);
        ElementClass c = classify(c3, d.f);
        CHECK((c == ElementClass::IDENTITY || c == ElementClass::LOXODROMIC));
        if (c == ElementClass::LOXODROMIC) {
            auto fp = fixed_points(c3, d.f);
            REQUIRE(fp.points.size() == 2);
            CHECK(antipodal_witness(c3, fp.points[0], fp.points[1]).has_value());
        }
        return d;
    };
    Decomposition a = check(MobiusMap(0, -1, 1, 0));
    CHECK(a.f.is_identity());
    Decomposition b = check(MobiusMap(3, 0, 0, 1));
    CHECK(b.u.is_identity());
    check(MobiusMap(1, Rational(1, 3), 0, 1));
    check(MobiusMap(2, 7, Rational(1, 9), 5));
}
