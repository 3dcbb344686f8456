#include <doctest.h>

#include "padic/berkovich.hpp"
#include "padic/errors.hpp"

using namespace padic;

namespace {

BerkPoint D(long c, long s) { return BerkPoint::disk(FieldElem(c), Rational(s)); }

}  // namespace

TEST_CASE("join examples") {
    PadicContext c3(3);
    BerkPoint g = BerkPoint::gauss();
    CHECK(same_point(c3, join(c3, BerkPoint::type1(ProjPoint(0)), BerkPoint::type1(ProjPoint(1))), g));
    CHECK(same_point(c3, join(c3, D(0, -1), D(0, 1)), D(0, 1)));
    CHECK(same_point(c3, join(c3, D(5, -2), D(5, -2)), D(5, -2)));
    CHECK(same_point(c3, D(3, -1), D(0, -1)));
    CHECK_FALSE(same_point(c3, D(1, -1), D(0, -1)));
}

TEST_CASE("hyp_dist examples") {
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        PadicContext ctx(p);
        CHECK(hyp_dist(ctx, BerkPoint::gauss(), D(0, 1)) == 1);
        CHECK(hyp_dist(ctx, D(0, -1), D(1, -1)) == 2);
        CHECK(hyp_dist(ctx, D(7, 3), D(7, 3)) == 0);
    }
}

TEST_CASE("median examples") {
    PadicContext c3(3);
    CHECK(same_point(c3, median(c3, D(0, -1), D(1, -1), D(0, -2)), D(0, -1)));
    CHECK(same_point(c3, median(c3, D(2, 1), D(2, 1), D(0, -4)), D(2, 1)));
    BerkPoint m = median(c3, BerkPoint::type1(ProjPoint(0)), BerkPoint::type1(ProjPoint(1)),
                         BerkPoint::type1(ProjPoint::infinity()));
    CHECK(same_point(c3, m, BerkPoint::gauss()));
}

TEST_CASE("act examples") {
    PadicContext c3(3);
    CHECK(same_point(c3, act(c3, MobiusMap(0, -1, 1, 0), BerkPoint::gauss()), BerkPoint::gauss()));
    CHECK(same_point(c3, act(c3, MobiusMap(0, 1, 1, 0), D(3, -1)), D(0, 1)));
    CHECK(same_point(c3, act(c3, MobiusMap(3, 0, 0, 1), BerkPoint::gauss()), D(0, -1)));
    CHECK(same_point(c3, act(c3, MobiusMap(0, 1, 1, 0), D(1, -1)), D(1, -1)));
    CHECK(same_point(c3, act(c3, MobiusMap(0, 1, 1, 0), D(9, 0)), BerkPoint::gauss()));
    CHECK(act(c3, MobiusMap(0, 1, 1, 0), BerkPoint::type1(ProjPoint(0))).is_infinity());
}

TEST_CASE("fixes_gauss and conjugator examples") {
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        PadicContext ctx(p);
        long pl = static_cast<long>(p);
        CHECK(fixes_gauss(ctx, MobiusMap(1, 1, 0, 1)));
        CHECK_FALSE(fixes_gauss(ctx, MobiusMap(pl, 0, 0, 1)));
        BerkPoint x = D(2, -1);
        MobiusMap C = conjugator_to_gauss(ctx, x);
        CHECK(same_point(ctx, act(ctx, C, x), BerkPoint::gauss()));
    }
    PadicContext c3(3);
    CHECK(conjugator_to_gauss(c3, D(2, -1)) == MobiusMap(1, -2, 0, 3));
}

TEST_CASE("half integer radius conjugator") {
    PadicContext c3(3, -3);
    BerkPoint x = BerkPoint::disk(FieldElem(0), Rational(-1, 2));
    MobiusMap C = conjugator_to_gauss(c3, x);
    CHECK(same_point(c3, act(c3, C, x), BerkPoint::gauss()));
    PadicContext c3r(3);
    CHECK_THROWS_AS(conjugator_to_gauss(c3r, x), UnsupportedExtension);
    CHECK_THROWS_AS(conjugator_to_gauss(c3r, BerkPoint::type1(ProjPoint(0))), TypeIPoint);
}

TEST_CASE("berk parse round trip") {
    for (const std::string s : {"gauss", "D(1/3, 3^(-2))", "D(0, 3^(1/2))"}) {
        BerkPoint x = parse_berk(s, 3);
        CHECK(parse_berk(x.str(), 3).str() == x.str());
    }
    CHECK(parse_berk("inf", 3).is_infinity());
}
