#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "padic/cfrac.hpp"
#include "padic/errors.hpp"
#include "padic/groups.hpp"
#include "padic/valuation.hpp"

using namespace padic;

namespace {

bool contains_map(const std::vector<Word>& ball, const MobiusMap& g) {
    return std::any_of(ball.begin(), ball.end(), [&](const Word& w) { return w.map == g; });
}

}  // namespace

TEST_CASE("enumerate_ball examples") {
    GroupSpec s1{{MobiusMap(0, 1, 1, 0)}, 5};
    CHECK(enumerate_ball(s1).size() == 2);
    GroupSpec s2{{MobiusMap(3, 0, 0, 1)}, 3};
    CHECK(enumerate_ball(s2).size() == 7);
    GroupSpec s3{{MobiusMap(1, 1, 0, 1), MobiusMap(-1, 0, 0, 1)}, 2};
    auto ball = enumerate_ball(s3);
    CHECK(contains_map(ball, MobiusMap(1, -1, 0, 1)));
    CHECK(contains_map(ball, MobiusMap(-1, 1, 0, 1)));
    CHECK(contains_map(ball, MobiusMap(-1, -1, 0, 1)));
    for (std::size_t i = 0; i < ball.size(); ++i) {
        for (std::size_t j = i + 1; j < ball.size(); ++j) CHECK_FALSE(ball[i].map == ball[j].map);
    }
    GroupSpec big{{MobiusMap(3, 0, 0, 1), MobiusMap(1, 1, 0, 1)}, 12, 100};
    CHECK_THROWS_AS(enumerate_ball(big), BudgetExceeded);
}

TEST_CASE("discreteness_report examples") {
    PadicContext c3(3);
    auto r1 = discreteness_report(c3, GroupSpec{{MobiusMap(3, 0, 0, 1)}, 4});
    CHECK(r1.verdict == Verdict::DISCRETE_CERTIFIED);
    auto r2 = discreteness_report(c3, GroupSpec{{MobiusMap(1, 1, 0, 1)}, 4});
    CHECK(r2.verdict == Verdict::NOT_CERTIFIED);
    CHECK_FALSE(r2.unitary_words.empty());
    PadicContext c5(5, -3);
    FieldElem w = omega(c5);
    auto r3 = discreteness_report(c5, GroupSpec{{MobiusMap(w, 0, 0, w * w)}, 3});
    CHECK(r3.verdict == Verdict::NOT_CERTIFIED);
    CHECK(r3.elements == 3);
    CHECK(r3.class_census[ElementClass::TAME_ELLIPTIC] == 2);
}

TEST_CASE("common_fixed_point examples") {
    PadicContext c5(5);
    MobiusMap g(2, 0, 0, Rational(1, 2));
    auto x = common_fixed_point(c5, {g});
    REQUIRE(x);
    CHECK(locus_membership(c5, g, *x));
    MobiusMap C(1, 1, -1, 1);
    MobiusMap h = C * g * C.inverse();
    try {
        auto y = common_fixed_point(c5, {g, h});
        REQUIRE(y);
        CHECK(locus_membership(c5, g, *y));
        CHECK(locus_membership(c5, h, *y));
    } catch (const NotAllElliptic& e) {
        CHECK_FALSE(e.word().empty());
    }
    PadicContext c3(3);
    MobiusMap wld(4, 0, 0, Rational(1, 4));
    auto z = common_fixed_point(c3, {wld, wld * wld});
    REQUIRE(z);
    CHECK(locus_membership(c3, wld, *z));
    CHECK_THROWS_AS(common_fixed_point(c3, {wld, MobiusMap(3, 0, 0, 1)}), NotAllElliptic);
}

TEST_CASE("orbit_sample examples") {
    PadicContext c3(3);
    auto o1 = orbit_sample(c3, GroupSpec{{MobiusMap(3, 0, 0, 1)}, 6}, ProjPoint(1));
    CHECK(o1.points.size() == 13);
    CHECK(o1.min_distance == Magnitude::power(3, -5));
    CHECK(o1.accumulation);
    auto o2 = orbit_sample(c3, GroupSpec{{MobiusMap(1, 1, 0, 1)}, 6}, ProjPoint(0));
    CHECK(o2.points.size() == 13);
    // 9 and 0 are both in the orbit {-6..6}.
    CHECK(o2.min_distance == Magnitude::power(3, -2));
    auto o3 = orbit_sample(c3, GroupSpec{{MobiusMap(0, -1, 1, 0)}, 6}, ProjPoint(0));
    CHECK_FALSE(o3.accumulation);
}

TEST_CASE("convergent examples") {
    CHECK(convergent_value(CFSpec::unit_ones(1), 1) == ProjPoint(1));
    CHECK(convergent_value(CFSpec::unit_ones(3), 3) == ProjPoint(Rational(2, 3)));
    CHECK(nested_value(CFSpec::unit_ones(3), 3) == ProjPoint(Rational(2, 3)));
    CFSpec s{{FieldElem(2), FieldElem(Rational(1, 3)), FieldElem(5)}, {FieldElem(1), FieldElem(-4), FieldElem(7)}};
    for (std::size_t n = 0; n <= 3; ++n) CHECK(convergent_value(s, n) == nested_value(s, n));
}

TEST_CASE("gap_sequence examples") {
    for (unsigned long p : {2UL, 3UL, 5UL}) {
        PadicContext ctx(p);
        for (const auto& m : gap_sequence(ctx, CFSpec::unit_ones(20), 20)) CHECK(m == Magnitude::one(p));
        long pl = static_cast<long>(p);
        CFSpec s{{FieldElem(pl)}, {FieldElem(0)}};
        CHECK(gap_sequence(ctx, s, 1)[0] == Magnitude::one(p));
        CFSpec t{{FieldElem(1), FieldElem(1)}, {FieldElem(Rational(1, pl)), FieldElem(Rational(1, pl))}};
        CHECK(gap_sequence(ctx, t, 2)[1] < Magnitude::one(p));
    }
}

TEST_CASE("divergence certificate examples") {
    PadicContext c3(3);
    CHECK(diverges_classically_unit_case(c3, CFSpec::unit_ones(10)).diverges);
    CFSpec s;
    for (int i = 1; i <= 5; ++i) {
        s.a.push_back(FieldElem(1));
        s.b.push_back(FieldElem(Rational(static_cast<long>(std::pow(3, i)))));
    }
    CHECK(diverges_classically_unit_case(c3, s).diverges);
    CFSpec t = CFSpec::unit_ones(4);
    t.a[0] = FieldElem(3);
    CHECK_FALSE(diverges_classically_unit_case(c3, t).diverges);
}
