#include <doctest.h>

#include "padic/errors.hpp"
#include "padic/verify.hpp"

using namespace padic;

TEST_CASE("rng draws are reproducible and in range") {
    Rng a(7), b(7);
    for (int i = 0; i < 1000; ++i) {
        long x = a.uniform(-3, 5);
        CHECK(x == b.uniform(-3, 5));
        CHECK(x >= -3);
        CHECK(x <= 5);
    }
    CHECK(derive_seed(1, "a") != derive_seed(1, "b"));
    CHECK(derive_seed(1, "a") != derive_seed(2, "a"));
}

TEST_CASE("random_map returns the requested class") {
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        PadicContext ctx(p, default_disc(p));
        Rng rng(p);
        for (ElementClass cls : map_classes()) {
            for (int i = 0; i < 20; ++i) {
                CHECK(classify(ctx, random_map(ctx, cls, rng)) == cls);
                CHECK(classify(ctx, random_map(ctx, cls, rng, {true})) == cls);
            }
        }
    }
}

TEST_CASE("sampled unitary maps have norm 1") {
    PadicContext ctx(3, -1);
    Rng rng(1);
    Sampler s(ctx, rng);
    for (int i = 0; i < 50; ++i) CHECK(is_unitary(ctx, s.unitary()));
}

TEST_CASE("a broken norm makes the equivalence property fail") {
    SuiteConfig cfg;
    cfg.p = 3;
    cfg.trials = 10;
    cfg.norm_hook = [](const PadicContext& ctx, const MobiusMap& g) {
        return norm(ctx, g) * Magnitude::real(ctx.p(), Rational(ctx.p()));
    };
    PropertyResult r = run_property("moebius.unitary_equivalences", cfg);
    CHECK(r.status == Status::FAIL);
    CHECK_FALSE(r.counterexample.empty());
    cfg.norm_hook = nullptr;
    CHECK(run_property("moebius.unitary_equivalences", cfg).status == Status::PASS);
}

TEST_CASE("prime-specific properties skip elsewhere") {
    SuiteConfig cfg;
    cfg.trials = 5;
    cfg.p = 2;
    CHECK(run_property("moebius.rho0_exact", cfg).status == Status::SKIPPED);
    CHECK(run_property("moebius.rho0_bracket_p2", cfg).status == Status::PASS);
    cfg.p = 5;
    CHECK(run_property("moebius.rho0_bracket_p2", cfg).status == Status::SKIPPED);
    CHECK(run_property("core.conjugate_symmetry", cfg).status == Status::SKIPPED);
}

TEST_CASE("suite report is deterministic and seed dependent") {
    SuiteConfig cfg;
    cfg.p = 3;
    cfg.trials = 5;
    cfg.seed = 42;
    SuiteReport a = run_suite(cfg), b = run_suite(cfg);
    CHECK(a.text() == b.text());
    CHECK(a.passed());
    CHECK(a.results.size() == property_ids().size());
    CHECK(a.to_json()["summary"]["failed"] == 0);
    cfg.seed = 43;
    // Counterexamples carry the sampled data, so they vary with the seed.
    cfg.norm_hook = [](const PadicContext& ctx, const MobiusMap& g) { return norm(ctx, g) * Magnitude::real(ctx.p(), 3); };
    PropertyResult x = run_property("moebius.unitary_equivalences", cfg);
    cfg.seed = 44;
    PropertyResult y = run_property("moebius.unitary_equivalences", cfg);
    CHECK(x.counterexample != y.counterexample);
}

TEST_CASE("unknown property ids are rejected") {
    CHECK_THROWS_AS(run_property("no.such.property", SuiteConfig{}), Error);
    CHECK_THROWS_AS(property_description("nope"), Error);
}
