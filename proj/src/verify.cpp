#include "padic/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "padic/cfrac.hpp"
#include "padic/errors.hpp"
#include "padic/geometry.hpp"
#include "padic/groups.hpp"
#include "padic/valuation.hpp"

namespace padic {

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw Error("Rng::uniform: empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do {
        x = eng_();
    } while (x >= limit);
    return lo + static_cast<long>(x % span);
}

std::uint64_t derive_seed(std::uint64_t seed, const std::string& id) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    // splitmix64 finalizer
    std::uint64_t z = seed ^ h;
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rational Sampler::unit() {
    long p = static_cast<long>(ctx_.p());
    auto draw = [&] {
        long v;
        do {
            v = rng_.uniform(1, 40);
        } while (v % p == 0);
        return v;
    };
    Rational r(draw(), draw());
    r.canonicalize();
    return rng_.chance(1, 2) ? Rational(-r) : r;
}

Rational Sampler::rational(long lo, long hi) { return unit() * rational_pow(ctx_.p(), rng_.uniform(lo, hi)); }

FieldElem Sampler::nonzero() {
    if (ctx_.disc() && rng_.chance(1, 3)) {
        Rational a = rng_.chance(1, 2) ? rational() : Rational(0);
        return FieldElem(a, rational(), *ctx_.disc());
    }
    return FieldElem(rational());
}

FieldElem Sampler::elem() { return rng_.chance(1, 16) ? FieldElem(0) : nonzero(); }

FieldElem Sampler::integral() {
    if (rng_.chance(1, 8)) return FieldElem(0);
    if (ctx_.disc() && rng_.chance(1, 4)) return FieldElem(rational(0, 2), rational(0, 2), *ctx_.disc());
    return FieldElem(rational(0, 2));
}

ProjPoint Sampler::point() { return rng_.chance(1, 12) ? ProjPoint::infinity() : ProjPoint(elem()); }

BerkPoint Sampler::berk() {
    long s = rng_.uniform(lo_ - 1, hi_ + 1);
    Rational e = rng_.chance(1, 4) ? Rational(2 * s + 1, 2) : Rational(s);
    return BerkPoint::disk(elem(), e);
}

MobiusMap Sampler::conjugator() {
    for (;;) {
        FieldElem a = elem(), b = elem(), c = elem(), d = elem();
        if (!(a * d - b * c).is_zero()) return MobiusMap(a, b, c, d);
    }
}

MobiusMap Sampler::unitary() {
    Magnitude one = Magnitude::one(ctx_.p());
    for (;;) {
        FieldElem a = integral(), b = integral(), c = integral(), d = integral();
        if (abs_elem(ctx_, a * d - b * c) == one) return MobiusMap(a, b, c, d).scaled(nonzero());
    }
}

MobiusMap Sampler::normal_form(ElementClass cls, const MapNeeds& needs) {
    unsigned long p = ctx_.p();
    FieldElem one(1);
    auto diag = [](const FieldElem& x, const FieldElem& y) { return MobiusMap(x, FieldElem(0), FieldElem(0), y); };
    switch (cls) {
        case ElementClass::IDENTITY:
            return MobiusMap();
        case ElementClass::PARABOLIC:
            return MobiusMap(one, nonzero(), FieldElem(0), one);
        case ElementClass::LOXODROMIC: {
            long k = rng_.uniform(1, 2) * (rng_.chance(1, 2) ? 1 : -1);
            FieldElem l(unit() * rational_pow(p, k));
            return needs.square_ratio ? diag(l, one / l) : diag(l, one);
        }
        case ElementClass::WILD_ELLIPTIC:
            for (;;) {
                FieldElem l(Rational(1) + unit() * rational_pow(p, rng_.uniform(1, 2)));
                if (l * l != one) return diag(l, one / l);
            }
        case ElementClass::TAME_ELLIPTIC:
            if (p >= 5) {
                for (;;) {
                    Rational u = unit();
                    Valuation v = vp(u * u - 1, p);
                    if (v && *v == 0) return diag(FieldElem(u), one / FieldElem(u));
                }
            }
            if (p == 3) {
                // Rational units are +-1 mod 3: z -> -1/z has det 1 but fixed points +-i,
                // z -> u z with u = 2 mod 3 has rational fixed points but det u.
                if (needs.square_ratio) return MobiusMap(FieldElem(0), FieldElem(-1), one, FieldElem(0));
                for (;;) {
                    Rational u = unit();
                    Valuation v = vp(u - 1, p);
                    if (v && *v == 0) return diag(FieldElem(u), one);
                }
            }
            // p = 2: order three, fixed points (1 +- sqrt(-3)) / 2.
            return MobiusMap(FieldElem(0), FieldElem(-1), one, one);
    }
    throw Error("normal_form: unknown class");
}

MobiusMap Sampler::map(ElementClass cls, const MapNeeds& needs) {
    MobiusMap N = normal_form(cls, needs);
    MobiusMap C = conjugator();
    MobiusMap g = (C * N * C.inverse()).scaled(nonzero());
    ElementClass got = classify(ctx_, g);
    if (got != cls) {
        throw Error("random_map: asked for " + to_string(cls) + ", built " + to_string(got) + " map " + g.str());
    }
    return g;
}

MobiusMap random_map(const PadicContext& ctx, ElementClass cls, Rng& rng, const MapNeeds& needs) {
    Sampler s(ctx, rng);
    return s.map(cls, needs);
}

const std::vector<ElementClass>& map_classes() {
    static const std::vector<ElementClass> v = {ElementClass::PARABOLIC, ElementClass::TAME_ELLIPTIC,
                                                ElementClass::WILD_ELLIPTIC, ElementClass::LOXODROMIC};
    return v;
}

long default_disc(unsigned long p) { return p == 2 ? -3 : -1; }

std::string to_string(Status s) {
    switch (s) {
        case Status::PASS: return "PASS";
        case Status::FAIL: return "FAIL";
        case Status::SKIPPED: return "SKIPPED";
    }
    return "?";
}

namespace {

struct PropertyFailed {
    std::string what;
};

struct PropertySkipped {
    std::string why;
};

struct Run {
    Run(const SuiteConfig& config, long d, const std::string& id)
        : cfg(config), disc(d), ctx(config.p, d), rng(derive_seed(config.seed, id)),
          S(ctx, rng, config.exp_lo, config.exp_hi) {}

    const SuiteConfig& cfg;
    long disc;
    PadicContext ctx;
    Rng rng;
    Sampler S;
    std::size_t trials = 0;
    std::size_t unsupported = 0;
    std::string note;

    unsigned long p() const { return ctx.p(); }
    Magnitude one() const { return Magnitude::one(ctx.p()); }
    Magnitude real(const Rational& c) const { return Magnitude::real(ctx.p(), c); }
    Magnitude pw(const Rational& e) const { return Magnitude::power(ctx.p(), e); }

    /// Scaled trial count.
    std::size_t n(std::size_t base) const {
        std::size_t k = base * static_cast<std::size_t>(std::max(cfg.trials, 0)) / 100;
        return std::max<std::size_t>(k, 1);
    }
    void tick() { ++trials; }

    template <class F>
    void check(bool ok, F&& what) {
        if (!ok) throw PropertyFailed{what()};
    }
    [[noreturn]] void skip(const std::string& why) { throw PropertySkipped{why}; }

    Magnitude norm(const MobiusMap& g) const { return cfg.norm_hook ? cfg.norm_hook(ctx, g) : padic::norm(ctx, g); }

    /// Runs f, counting draws whose data needs a square root outside the field.
    template <class F>
    bool attempt(F&& f) {
        try {
            f();
            return true;
        } catch (const UnsupportedExtension&) {
            ++unsupported;
            return false;
        }
    }

    ElementClass any_class() { return map_classes()[static_cast<std::size_t>(rng.uniform(0, 3))]; }
};

std::string show(const MobiusMap& g) { return "g = " + g.str(); }

// Context with the cube roots of unity, for the epsilon functionals.
long omega_disc(const Run& r) { return r.disc == -3 ? r.disc : -3; }

// ---------------------------------------------------------------- padic-core

void core_ultrametric(Run& r) {
    for (std::size_t i = 0; i < r.n(1000); ++i) {
        r.tick();
        FieldElem x = r.S.elem(), y = r.S.elem();
        Magnitude ax = abs_elem(r.ctx, x), ay = abs_elem(r.ctx, y), axy = abs_elem(r.ctx, x + y);
        r.check(axy <= max(ax, ay), [&] { return "x = " + x.str() + ", y = " + y.str(); });
        if (ax != ay) r.check(axy == max(ax, ay), [&] { return "equality fails for x = " + x.str() + ", y = " + y.str(); });
    }
}

void core_multiplicative(Run& r) {
    for (std::size_t i = 0; i < r.n(1000); ++i) {
        r.tick();
        FieldElem x = r.S.elem(), y = r.S.elem();
        r.check(abs_elem(r.ctx, x * y) == abs_elem(r.ctx, x) * abs_elem(r.ctx, y),
                [&] { return "x = " + x.str() + ", y = " + y.str(); });
    }
}

void core_conjugate_symmetry(Run& r) {
    if (r.ctx.split()) r.skip("the extension splits over Q_p");
    for (std::size_t i = 0; i < r.n(1000); ++i) {
        r.tick();
        FieldElem x = r.S.elem();
        r.check(abs_elem(r.ctx, x) == abs_elem(r.ctx, x.conj()), [&] { return "x = " + x.str(); });
    }
}

void core_order_vs_float(Run& r) {
    auto draw = [&] {
        if (r.rng.chance(1, 20)) return Magnitude::zero(r.p());
        Rational c(r.rng.uniform(1, 100), r.rng.uniform(1, 100));
        c.canonicalize();
        Rational e(r.rng.uniform(-12, 12), r.rng.uniform(1, 2));
        e.canonicalize();
        return r.real(c) * r.pw(e);
    };
    for (std::size_t i = 0; i < r.n(1000); ++i) {
        r.tick();
        Magnitude a = draw(), b = draw();
        double da = a.to_double(), db = b.to_double();
        r.check((a < b) == !(b <= a), [&] { return "order not total at " + a.str() + ", " + b.str(); });
        double gap = std::fabs(da - db);
        double scale = std::max(std::fabs(da), std::fabs(db));
        if (gap >= 10 * std::numeric_limits<double>::epsilon() * scale && gap > 0) {
            r.check((a < b) == (da < db), [&] { return "exact and float order disagree: " + a.str() + " vs " + b.str(); });
        }
    }
}

void core_cyclotomic(Run& r) {
    unsigned long d = r.p();
    Magnitude prev = cyclotomic_valuation(r.p(), d);
    for (int k = 2; k <= 6; ++k) {
        r.tick();
        d *= r.p();
        Magnitude cur = cyclotomic_valuation(r.p(), d);
        r.check(prev < cur && cur < r.one(), [&] { return "d = " + std::to_string(d); });
        prev = cur;
    }
}

// ---------------------------------------------------------------- projective

void proj_ultrametric(Run& r) {
    for (std::size_t i = 0; i < r.n(1000); ++i) {
        r.tick();
        ProjPoint x = r.S.point(), y = r.S.point(), z = r.S.point();
        Magnitude xz = chordal(r.ctx, x, z), xy = chordal(r.ctx, x, y), yz = chordal(r.ctx, y, z);
        r.check(xz <= max(xy, yz) && xy <= r.one() && xy == chordal(r.ctx, y, x),
                [&] { return "x = " + x.str() + ", y = " + y.str() + ", z = " + z.str(); });
    }
}

void proj_unitary_isometry(Run& r) {
    for (std::size_t i = 0; i < r.n(200); ++i) {
        r.tick();
        MobiusMap g = r.S.unitary();
        for (int j = 0; j < 5; ++j) {
            ProjPoint z = r.S.point(), w = r.S.point();
            r.check(chordal(r.ctx, g(z), g(w)) == chordal(r.ctx, z, w),
                    [&] { return show(g) + ", z = " + z.str() + ", w = " + w.str(); });
        }
    }
}

void proj_cross_ratio(Run& r) {
    for (std::size_t i = 0; i < r.n(200); ++i) {
        r.tick();
        MobiusMap g = r.S.conjugator();
        ProjPoint x = r.S.point(), y = r.S.point(), z = r.S.point(), w = r.S.point();
        if (x == z || y == w) continue;
        r.check(cross_ratio_chordal(r.ctx, g(x), g(y), g(z), g(w)) == cross_ratio_chordal(r.ctx, x, y, z, w),
                [&] { return show(g) + ", points " + x.str() + ", " + y.str() + ", " + z.str() + ", " + w.str(); });
    }
}

// ---------------------------------------------------------------- moebius

void mob_equivalences(Run& r) {
    BerkPoint gauss = BerkPoint::gauss();
    for (std::size_t i = 0; i < r.n(300); ++i) {
        r.tick();
        MobiusMap g = r.S.unitary();
        r.check(r.norm(g) == r.one(), [&] { return "norm " + r.norm(g).str() + " for " + show(g); });
        r.check(lipschitz(r.ctx, g) == r.one(), [&] { return "Lipschitz constant != 1 for " + show(g); });
        r.check(displacement_gauss(r.ctx, g) == 0 && same_point(r.ctx, act(r.ctx, g, gauss), gauss),
                [&] { return "moves the Gauss point: " + show(g); });
        for (int j = 0; j < 50; ++j) {
            ProjPoint z = r.S.point(), w = r.S.point();
            r.check(chordal(r.ctx, g(z), g(w)) == chordal(r.ctx, z, w),
                    [&] { return "not an isometry: " + show(g) + ", z = " + z.str() + ", w = " + w.str(); });
        }
        for (int j = 0; j < 20; ++j) {
            MobiusMap h = r.S.conjugator();
            Magnitude nh = r.norm(h);
            r.check(r.norm(g * h) == nh && r.norm(h * g) == nh && r.norm(g * h * g.inverse()) == nh,
                    [&] { return "norm not invariant: " + show(g) + ", h = " + h.str(); });
        }
    }
}

void mob_conjugation(Run& r) {
    for (std::size_t i = 0; i < r.n(200); ++i) {
        r.tick();
        MobiusMap g = r.S.map(r.any_class());
        MobiusMap h = r.S.conjugator();
        r.check(classify(r.ctx, h * g * h.inverse()) == classify(r.ctx, g),
                [&] { return show(g) + ", h = " + h.str(); });
    }
}

void mob_scale(Run& r) {
    auto point_set = [&](const MobiusMap& g) {
        std::vector<std::string> v;
        for (const auto& z : fixed_points(r.ctx, g).points) v.push_back(z.str());
        std::sort(v.begin(), v.end());
        return v;
    };
    for (std::size_t i = 0; i < r.n(200); ++i) {
        r.tick();
        MobiusMap g = r.S.map(r.any_class(), {true});
        MobiusMap h = g.scaled(r.S.nonzero());
        r.check(padic::norm(r.ctx, g) == padic::norm(r.ctx, h) && M_norm(r.ctx, g) == M_norm(r.ctx, h) &&
                    classify(r.ctx, g) == classify(r.ctx, h),
                [&] { return show(g) + " vs " + h.str(); });
        std::vector<std::string> a, b;
        bool ga = r.attempt([&] { a = point_set(g); });
        bool gb = r.attempt([&] { b = point_set(h); });
        r.check(ga == gb && a == b, [&] { return "fixed points differ: " + show(g) + " vs " + h.str(); });
    }
}

void mob_lipschitz(Run& r) {
    for (std::size_t i = 0; i < r.n(100); ++i) {
        r.tick();
        MobiusMap g = r.S.map(map_classes()[i % 4]);
        Magnitude L = lipschitz(r.ctx, g);
        for (int j = 0; j < 500; ++j) {
            ProjPoint z = r.S.point(), w = r.S.point();
            r.check(chordal(r.ctx, g(z), g(w)) <= L * chordal(r.ctx, z, w),
                    [&] { return "bound fails: " + show(g) + ", z = " + z.str() + ", w = " + w.str(); });
        }
        auto [x, y] = lipschitz_witness(r.ctx, g);
        r.check(!(x == y) && chordal(r.ctx, g(x), g(y)) == L * chordal(r.ctx, x, y),
                [&] { return "witness not sharp: " + show(g) + ", pair " + x.str() + ", " + y.str(); });
    }
}

void mob_rho0_bound(Run& r) {
    for (ElementClass cls : map_classes()) {
        for (std::size_t i = 0; i < r.n(200); ++i) {
            r.tick();
            MobiusMap g = r.S.map(cls, {true});
            Magnitude nmi = norm_minus_identity(r.ctx, g);
            Rho0 q = rho0_identity(r.ctx, g);
            r.check(q.value <= nmi, [&] { return "rho0 " + q.value.str() + " > |g - I| " + nmi.str() + " for " + show(g); });
            for (int j = 0; j < 20; ++j) {
                ProjPoint z = r.S.point();
                r.check(chordal(r.ctx, g(z), z) <= nmi, [&] { return "displacement above |g - I|: " + show(g) + ", z = " + z.str(); });
            }
        }
    }
}

template <class F>
void with_omega_context(Run& r, F&& body) {
    PadicContext aux(r.p(), omega_disc(r));
    Sampler A(aux, r.rng, r.cfg.exp_lo, r.cfg.exp_hi);
    body(aux, A);
}

void mob_epsilon(Run& r) {
    with_omega_context(r, [&](const PadicContext& ctx, Sampler& A) {
        Magnitude two = Magnitude::real(r.p(), 2), six = Magnitude::real(r.p(), 6);
        for (ElementClass cls : map_classes()) {
            for (std::size_t i = 0; i < r.n(200); ++i) {
                r.tick();
                MobiusMap g = A.map(cls);
                Magnitude e = epsilon(ctx, g), M = M_norm(ctx, g);
                r.check(e <= two * M && M <= six * e,
                        [&] { return "eps = " + e.str() + ", M = " + M.str() + " for " + show(g); });
            }
        }
    });
}

void mob_epsilon1(Run& r) {
    Magnitude two = r.real(2);
    for (ElementClass cls : map_classes()) {
        for (std::size_t i = 0; i < r.n(200); ++i) {
            r.tick();
            MobiusMap g = r.S.map(cls);
            Magnitude e = epsilon1(r.ctx, g), M = M_norm(r.ctx, g);
            r.check(e <= two * M && M <= e, [&] { return "eps1 = " + e.str() + ", M = " + M.str() + " for " + show(g); });
        }
    }
}

void mob_epsilon2(Run& r) {
    Magnitude two = r.real(2);
    for (std::size_t i = 0; i < r.n(200); ++i) {
        r.tick();
        MobiusMap g = r.S.map(ElementClass::PARABOLIC);
        Magnitude e = epsilon2(r.ctx, g), M = M_norm(r.ctx, g);
        r.check(e <= two * M && M <= e, [&] { return "eps2 = " + e.str() + ", M = " + M.str() + " for " + show(g); });
    }
}

void mob_rho0_exact(Run& r) {
    if (r.p() < 3) r.skip("exact rho0 needs p >= 3");
    for (ElementClass cls : map_classes()) {
        for (std::size_t i = 0; i < r.n(50); ++i) {
            r.tick();
            MobiusMap g = r.S.map(cls);
            Magnitude M = M_norm(r.ctx, g);
            Rho0 q = rho0_identity(r.ctx, g);
            r.check(q.exact && q.value == M && chordal(r.ctx, g(q.witness), q.witness) == M,
                    [&] { return "value " + q.value.str() + ", M = " + M.str() + " for " + show(g); });
            for (int j = 0; j < 500; ++j) {
                ProjPoint z = r.S.point();
                r.check(chordal(r.ctx, g(z), z) <= M, [&] { return "sample above M: " + show(g) + ", z = " + z.str(); });
            }
        }
    }
}

void mob_rho0_bracket(Run& r) {
    if (r.p() != 2) r.skip("the bracket is the p = 2 statement");
    Magnitude two = r.real(2);
    std::size_t below = 0, samples = 0;
    for (ElementClass cls : map_classes()) {
        for (std::size_t i = 0; i < r.n(50); ++i) {
            r.tick();
            MobiusMap g = r.S.map(cls);
            Magnitude M = M_norm(r.ctx, g);
            Rho0 q = rho0_identity(r.ctx, g);
            r.check(q.lower == M / two && q.upper == M * two && chordal(r.ctx, g(q.witness), q.witness) == q.value,
                    [&] { return "inconsistent bracket for " + show(g); });
            Magnitude best = q.value;
            for (int j = 0; j < 500; ++j) {
                ProjPoint z = r.S.point();
                Magnitude d = chordal(r.ctx, g(z), z);
                r.check(d <= two * M, [&] { return "sample above 2M: " + show(g) + ", z = " + z.str(); });
                if (two * d < M) ++below;
                ++samples;
                best = max(best, d);
            }
            r.check(M <= two * best, [&] { return "sup of displacements " + best.str() + " below M/2, M = " + M.str() + " for " + show(g); });
        }
    }
    r.note = std::to_string(below) + " of " + std::to_string(samples) +
             " sampled displacements lie below M/2 (points near fixed points); the bracket holds for the supremum";
}

void mob_rho0_pair(Run& r) {
    if (r.p() < 3) r.skip("exact rho0 needs p >= 3");
    for (std::size_t i = 0; i < r.n(100); ++i) {
        r.tick();
        MobiusMap g = r.S.map(r.any_class()), h = r.S.map(r.any_class());
        Rho0 q = rho0(r.ctx, g, h);
        ProjPoint z = h.inverse()(q.witness);
        r.check(chordal(r.ctx, g(z), h(z)) == q.value, [&] { return "witness fails: " + show(g) + ", h = " + h.str(); });
        for (int j = 0; j < 50; ++j) {
            ProjPoint w = r.S.point();
            r.check(chordal(r.ctx, g(w), h(w)) <= q.value, [&] { return show(g) + ", h = " + h.str() + ", w = " + w.str(); });
        }
    }
}

void mob_distance_to_unitary(Run& r) {
    for (std::size_t i = 0; i < r.n(100); ++i) {
        r.tick();
        MobiusMap u = r.S.unitary();
        r.check(d_to_unitary(r.ctx, u).is_zero(), [&] { return "unitary at distance > 0: " + show(u); });
    }
    for (std::size_t i = 0; i < r.n(100); ++i) {
        r.tick();
        MobiusMap g;
        do {
            g = r.S.map(r.any_class());
        } while (is_unitary(r.ctx, g));
        r.check(d_to_unitary(r.ctx, g) == r.one(), [&] { return "distance != 1 for " + show(g); });
        for (int j = 0; j < 10; ++j) {
            MobiusMap u = r.S.unitary();
            auto z = d_to_unitary_witness(r.ctx, g, u);
            r.check(z && chordal(r.ctx, g(*z), u(*z)) == r.one(), [&] { return "no witness: " + show(g) + ", u = " + u.str(); });
            if (r.p() >= 3) {
                r.check(rho0(r.ctx, g, u).value == r.one(), [&] { return "rho0(g, u) != 1: " + show(g) + ", u = " + u.str(); });
            }
        }
    }
}

void mob_three_point(Run& r) {
    ProjPoint z0(0), z1(1), zi = ProjPoint::infinity();
    for (std::size_t i = 0; i < r.n(10); ++i) {
        r.tick();
        MobiusMap f = r.S.map(r.any_class());
        r.check(mobius_through_three_points(z0, z1, zi, f(z0), f(z1), f(zi)) == f,
                [&] { return "limit not reconstructed: " + show(f); });
        // Normalize by f's first nonzero entry for the entrywise comparison.
        int pos = 0;
        while (f.matrix()(pos / 2, pos % 2).is_zero()) ++pos;
        auto entry = [&](const MobiusMap& m, int k) { return m.matrix()(k / 2, k % 2) / m.matrix()(pos / 2, pos % 2); };
        Magnitude fmax = max_entry(r.ctx, f), ef = abs_elem(r.ctx, f.matrix()(pos / 2, pos % 2));
        Magnitude K = fmax / ef;
        FieldElem t1(r.S.unit()), t2(r.S.unit());
        std::optional<Magnitude> prev;
        for (long n = 1; n <= 8; ++n) {
            FieldElem q(rational_pow(r.p(), n));
            MobiusMap un = MobiusMap(1, q * t1, 0, 1) * MobiusMap(1, 0, q * t2, 1);
            Magnitude rate = r.pw(-n);
            r.check(norm_minus_identity(r.ctx, un) == rate, [&] { return "|u_n - I| != p^-n at n = " + std::to_string(n); });
            MobiusMap fn = un * f;
            MobiusMap g = mobius_through_three_points(z0, z1, zi, fn(z0), fn(z1), fn(zi));
            r.check(g == fn, [&] { return "three-point data misses f_n at n = " + std::to_string(n) + " for " + show(f); });
            if (rate * fmax < ef) {
                Magnitude diff = Magnitude::zero(r.p());
                for (int k = 0; k < 4; ++k) diff = max(diff, abs_elem(r.ctx, entry(g, k) - entry(f, k)));
                r.check(diff <= rate * K * K, [&] { return "entries converge slower than p^-n at n = " + std::to_string(n) + " for " + show(f); });
            }
            Magnitude v = rho0(r.ctx, fn, f).value;
            r.check(v <= rate && (!prev || v <= *prev),
                    [&] { return "rho0(f_n, f) = " + v.str() + " at n = " + std::to_string(n) + " for " + show(f); });
            prev = v;
        }
    }
}

// ---------------------------------------------------------------- berkovich

void berk_isometry(Run& r) {
    for (std::size_t i = 0; i < r.n(200); ++i) {
        r.tick();
        MobiusMap g = r.S.conjugator();
        for (int j = 0; j < 5; ++j) {
            BerkPoint x = r.S.berk(), y = r.S.berk();
            r.check(hyp_dist(r.ctx, act(r.ctx, g, x), act(r.ctx, g, y)) == hyp_dist(r.ctx, x, y),
                    [&] { return show(g) + ", x = " + x.str() + ", y = " + y.str(); });
        }
    }
}

void berk_displacement(Run& r) {
    BerkPoint gauss = BerkPoint::gauss();
    for (ElementClass cls : map_classes()) {
        for (std::size_t i = 0; i < r.n(200); ++i) {
            r.tick();
            MobiusMap g = r.S.map(cls);
            Rational lhs = hyp_dist(r.ctx, act(r.ctx, g, gauss), gauss);
            Rational rhs = 2 * padic::norm(r.ctx, g).log_p();
            r.check(lhs == rhs, [&] { return "dist " + to_string(lhs) + " vs " + to_string(rhs) + " for " + show(g); });
        }
    }
}

void berk_composition(Run& r) {
    for (std::size_t i = 0; i < r.n(200); ++i) {
        r.tick();
        MobiusMap g = r.S.conjugator(), h = r.S.conjugator();
        BerkPoint x = r.rng.chance(1, 8) ? BerkPoint::type1(r.S.point()) : r.S.berk();
        r.check(same_point(r.ctx, act(r.ctx, g * h, x), act(r.ctx, g, act(r.ctx, h, x))),
                [&] { return show(g) + ", h = " + h.str() + ", x = " + x.str(); });
    }
}

void berk_tree(Run& r) {
    for (std::size_t i = 0; i < r.n(500); ++i) {
        r.tick();
        BerkPoint x = r.S.berk(), y = r.S.berk(), z = r.S.berk(), w = r.S.berk();
        auto pts = [&] { return x.str() + ", " + y.str() + ", " + z.str() + ", " + w.str(); };
        const PadicContext& c = r.ctx;
        r.check(same_point(c, join(c, x, y), join(c, y, x)) && same_point(c, join(c, x, x), x) &&
                    same_point(c, join(c, join(c, x, y), z), join(c, x, join(c, y, z))),
                [&] { return "join laws fail at " + pts(); });
        BerkPoint m = median(c, x, y, z);
        r.check(on_segment(c, m, x, y) && on_segment(c, m, y, z) && on_segment(c, m, x, z),
                [&] { return "median off a segment at " + pts(); });
        std::vector<Rational> s = {hyp_dist(c, x, y) + hyp_dist(c, z, w), hyp_dist(c, x, z) + hyp_dist(c, y, w),
                                   hyp_dist(c, x, w) + hyp_dist(c, y, z)};
        std::sort(s.begin(), s.end());
        r.check(s[1] == s[2], [&] { return "four-point condition fails at " + pts(); });
    }
}

void berk_unitary_gauss(Run& r) {
    for (std::size_t i = 0; i < r.n(300); ++i) {
        r.tick();
        MobiusMap g = r.rng.chance(1, 2) ? r.S.unitary() : r.S.map(r.any_class());
        r.check(is_unitary(r.ctx, g) == fixes_gauss(r.ctx, g), [&] { return show(g); });
    }
}

// ---------------------------------------------------------------- geometry

int shared_endpoints(const Geodesic& A, const Geodesic& B) {
    int k = 0;
    for (const auto* x : {&A.alpha, &A.beta}) {
        if (*x == B.alpha || *x == B.beta) ++k;
    }
    return k;
}

void geo_census(Run& r) {
    for (ElementClass cls : map_classes()) {
        for (std::size_t i = 0; i < r.n(50); ++i) {
            r.tick();
            r.attempt([&] {
                MobiusMap g = r.S.map(cls, {true});
                InvolutionPair pr = factor_involutions(r.ctx, g, FieldElem(-1));
                r.check(pr.f * pr.h == g && is_involution(pr.f) && is_involution(pr.h),
                        [&] { return "bad factorization of " + show(g); });
                Geodesic Af = axis(r.ctx, pr.f), Ah = axis(r.ctx, pr.h);
                if (cls == ElementClass::PARABOLIC) {
                    r.check(shared_endpoints(Af, Ah) == 1, [&] { return "axes of the factors of parabolic " + show(g) + " do not share one endpoint"; });
                    return;
                }
                r.check(shared_endpoints(Af, Ah) == 0, [&] { return "axes share an endpoint for " + show(g); });
                Geodesic Ag = axis(r.ctx, g);
                r.check(is_orthogonal(r.ctx, Ag, Af) && is_orthogonal(r.ctx, Ag, Ah),
                        [&] { return "factor axes not orthogonal to the axis of " + show(g); });
                bool meet;
                if (r.p() == 2) {
                    meet = tailed_axes_meet(r.ctx, tailed_axis(r.ctx, pr.f, Ag), tailed_axis(r.ctx, pr.h, Ag));
                } else {
                    meet = geodesics_meet(r.ctx, Af, Ah);
                }
                r.check(meet == is_elliptic(cls), [&] {
                    return std::string(meet ? "axes meet" : "axes disjoint") + " for " + to_string(cls) + " " + show(g);
                });
            });
        }
    }
}

void geo_orthogonal(Run& r) {
    BerkPoint inf = BerkPoint::type1(ProjPoint::infinity());
    for (std::size_t i = 0; i < r.n(200); ++i) {
        r.tick();
        MobiusMap C = r.S.conjugator();
        FieldElem t = r.S.nonzero();
        Geodesic A{C(ProjPoint(0)), C(ProjPoint::infinity())}, B{C(ProjPoint(t)), C(ProjPoint(-t))};
        r.check(is_orthogonal(r.ctx, A, B) && is_orthogonal(r.ctx, B, A),
                [&] { return "constructed pair not orthogonal: " + to_string(A) + ", " + to_string(B); });
        ProjPoint a1 = r.S.point(), a2 = r.S.point(), b1 = r.S.point(), b2 = r.S.point();
        if (!(a1 == a2) && !(b1 == b2)) {
            Geodesic X{a1, a2}, Y{b1, b2};
            r.check(is_orthogonal(r.ctx, X, Y) == is_orthogonal(r.ctx, Y, X),
                    [&] { return "asymmetric: " + to_string(X) + ", " + to_string(Y); });
        }
        bool meet = geodesics_meet(r.ctx, A, B);
        if (r.p() == 2) {
            r.check(!meet, [&] { return "orthogonal pair meets at p = 2: " + to_string(A) + ", " + to_string(B); });
        } else {
            BerkPoint pa = BerkPoint::type1(A.alpha), pb = BerkPoint::type1(A.beta);
            BerkPoint m1 = median(r.ctx, pa, pb, BerkPoint::type1(B.alpha));
            BerkPoint m2 = median(r.ctx, pa, pb, BerkPoint::type1(B.beta));
            r.check(meet && same_point(r.ctx, m1, m2),
                    [&] { return "orthogonal pair does not meet in one point: " + to_string(A) + ", " + to_string(B); });
        }
        (void)inf;
    }
}

void geo_perpendicular(Run& r) {
    std::size_t computed = 0;
    for (std::size_t i = 0; i < r.n(100); ++i) {
        r.tick();
        MobiusMap C = r.S.conjugator();
        FieldElem a = r.S.nonzero(), s = r.S.nonzero();
        if (s * s == FieldElem(1)) continue;
        Geodesic A{C(ProjPoint(0)), C(ProjPoint::infinity())}, B{C(ProjPoint(a * s * s)), C(ProjPoint(a))};
        Geodesic expect{C(ProjPoint(a * s)), C(ProjPoint(-(a * s)))};
        std::optional<Geodesic> P, Q;
        r.attempt([&] { P = common_perpendicular(r.ctx, A, B); });
        r.attempt([&] {
            Q = r.p() == 2 ? common_perpendicular_root(r.ctx, A, B) : common_perpendicular_balanced(r.ctx, A, B);
        });
        for (const auto& X : {P, Q}) {
            if (!X) continue;
            ++computed;
            r.check(is_orthogonal(r.ctx, A, *X) && is_orthogonal(r.ctx, B, *X) && same_geodesic(*X, expect),
                    [&] { return "perpendicular " + to_string(*X) + " to " + to_string(A) + ", " + to_string(B); });
        }
    }
    if (computed == 0) r.skip("no perpendicular was computable in the field");
}

void geo_fixed_locus(Run& r) {
    using K = FixedLocus::Kind;
    long p = static_cast<long>(r.p());
    std::vector<FieldElem> base = {FieldElem(0), FieldElem(1), FieldElem(-1), FieldElem(p), FieldElem(-p),
                                   FieldElem(Rational(1, p)), FieldElem(Rational(-1, p)), FieldElem(p * p),
                                   FieldElem(Rational(1, p * p)), FieldElem(1 + p), FieldElem(1 - p), FieldElem(2),
                                   FieldElem(3)};
    std::size_t grid_min = std::numeric_limits<std::size_t>::max();
    for (ElementClass cls : map_classes()) {
        for (std::size_t i = 0; i < r.n(20); ++i) {
            r.tick();
            r.attempt([&] {
                MobiusMap g = r.S.map(cls);
                FixedLocus F = fixed_locus(r.ctx, g);
                std::vector<FieldElem> centers = base;
                for (const auto& z : fixed_points(r.ctx, g).points) {
                    if (z.is_inf()) continue;
                    for (long j = -2; j <= 4; ++j) centers.push_back(z.x() + FieldElem(rational_pow(r.p(), j)));
                    centers.push_back(z.x());
                }
                std::vector<BerkPoint> grid;
                for (const auto& c : centers) {
                    for (long e = -6; e <= 6; ++e) grid.push_back(BerkPoint::disk(c, Rational(e, 2)));
                }
                for (int j = 0; j < 200; ++j) grid.push_back(r.S.berk());
                grid_min = std::min(grid_min, grid.size());
                for (const auto& x : grid) {
                    r.check(locus_contains(r.ctx, F, x) == locus_membership(r.ctx, g, x),
                            [&] { return to_string(F) + " disagrees with act at " + x.str() + " for " + show(g); });
                }
                std::optional<BerkPoint> edge, beyond;
                if (F.kind == K::AXIS || F.kind == K::TUBE) {
                    MobiusMap Fm = frame_map(F.geodesic.alpha, F.geodesic.beta);
                    edge = act(r.ctx, Fm, BerkPoint::disk(FieldElem(1), -F.radius));
                    beyond = act(r.ctx, Fm, BerkPoint::disk(FieldElem(1), -F.radius - Rational(1, 2)));
                } else if (F.kind == K::HOROBALL) {
                    const ProjPoint& xi = F.fixed_point;
                    MobiusMap C = xi.is_inf() ? MobiusMap() : MobiusMap(xi.x(), FieldElem(1), FieldElem(1), FieldElem(0));
                    MobiusMap n = C.inverse() * g * C;
                    Rational s = log_abs(r.ctx, n.b() / n.d());
                    edge = act(r.ctx, C, BerkPoint::disk(FieldElem(0), s));
                    beyond = act(r.ctx, C, BerkPoint::disk(FieldElem(0), s - Rational(1, 2)));
                }
                if (edge) {
                    r.check(locus_membership(r.ctx, g, *edge) && locus_contains(r.ctx, F, *edge),
                            [&] { return "boundary " + edge->str() + " not fixed by " + show(g); });
                    r.check(!locus_membership(r.ctx, g, *beyond) && !locus_contains(r.ctx, F, *beyond),
                            [&] { return "point " + beyond->str() + " past the boundary is fixed by " + show(g); });
                }
            });
        }
    }
    if (grid_min != std::numeric_limits<std::size_t>::max()) r.note = "at least " + std::to_string(grid_min) + " disks per map";
}

void geo_decompose(Run& r) {
    std::size_t draws = 0;
    auto one_map = [&](const MobiusMap& g) {
        Decomposition d = decompose_unitary_loxodromic(r.ctx, g);
        r.check(is_unitary(r.ctx, d.u) && d.u * d.f == g, [&] { return "u not unitary or u f != g for " + show(g); });
        ElementClass c = classify(r.ctx, d.f);
        r.check(c == ElementClass::IDENTITY || c == ElementClass::LOXODROMIC,
                [&] { return "f is " + to_string(c) + " for " + show(g); });
        if (c == ElementClass::LOXODROMIC) {
            FixedPoints fp = fixed_points(r.ctx, d.f);
            auto w = antipodal_witness(r.ctx, fp.points.at(0), fp.points.at(1));
            r.check(w && is_unitary(r.ctx, *w) && (*w)(ProjPoint(0)) == fp.points[0] &&
                        (*w)(ProjPoint::infinity()) == fp.points[1],
                    [&] { return "fixed points of f not antipodal for " + show(g); });
        }
    };
    for (ElementClass cls : map_classes()) {
        for (std::size_t i = 0; i < r.n(100); ++i) {
            r.tick();
            ++draws;
            r.attempt([&] { one_map(r.S.map(cls)); });
        }
    }
    for (std::size_t i = 0; i < r.n(100); ++i) {
        r.tick();
        ++draws;
        r.attempt([&] {
            MobiusMap u = r.S.unitary();
            r.check(decompose_unitary_loxodromic(r.ctx, u).f.is_identity(), [&] { return "unitary input gave f != I: " + show(u); });
            one_map(u);
        });
    }
    r.check(r.unsupported * 5 < draws, [&] {
        return std::to_string(r.unsupported) + " of " + std::to_string(draws) + " draws needed a field extension";
    });
}

// ---------------------------------------------------------------- groups

MobiusMap unitary_elliptic(Run& r) {
    ElementClass cls = r.rng.chance(1, 2) ? ElementClass::TAME_ELLIPTIC : ElementClass::WILD_ELLIPTIC;
    MobiusMap N = r.S.normal_form(cls);
    MobiusMap U = r.S.unitary();
    return U * N * U.inverse();
}

void grp_common_fixed_point(Run& r) {
    for (std::size_t i = 0; i < r.n(20); ++i) {
        r.tick();
        r.attempt([&] {
            std::vector<MobiusMap> family;
            for (int tries = 0;; ++tries) {
                r.check(tries < 100, [] { return std::string("could not build an all-elliptic family"); });
                family.clear();
                long size = r.rng.uniform(2, 4);
                for (long k = 0; k < size; ++k) family.push_back(unitary_elliptic(r));
                bool ok = true;
                for (const auto& a : family) {
                    for (const auto& b : family) {
                        ElementClass c = classify(r.ctx, a * b);
                        if (c != ElementClass::IDENTITY && !is_elliptic(c)) ok = false;
                    }
                }
                if (ok) break;
            }
            auto describe = [&] {
                std::string s;
                for (const auto& g : family) s += "[" + g.str() + "]";
                return s;
            };
            auto x = common_fixed_point(r.ctx, family);
            r.check(x.has_value(), [&] { return "no common point for " + describe(); });
            for (const auto& g : family) {
                r.check(locus_membership(r.ctx, g, *x), [&] { return x->str() + " not fixed by " + g.str(); });
            }
            MobiusMap C = r.S.conjugator();
            MobiusMap lox = C * MobiusMap(static_cast<long>(r.p()), 0, 0, 1) * C.inverse();
            std::vector<MobiusMap> bad = family;
            bad.insert(bad.begin() + r.rng.uniform(0, static_cast<long>(bad.size())), lox);
            bool raised = false;
            try {
                common_fixed_point(r.ctx, bad);
            } catch (const NotAllElliptic& e) {
                raised = !e.word().empty();
            }
            r.check(raised, [&] { return "injected loxodromic not reported for " + describe(); });
        });
    }
    if (r.unsupported == r.trials) r.skip("every family needed fixed points outside the field");
}

void grp_horoballs(Run& r) {
    r.tick();
    std::vector<MobiusMap> gens;
    std::vector<FixedLocus> loci;
    for (long n = 1; n <= 3; ++n) {
        gens.emplace_back(1, FieldElem(rational_pow(r.p(), -n)), 0, 1);
        loci.push_back(fixed_locus(r.ctx, gens.back()));
        r.check(loci.back().kind == FixedLocus::Kind::HOROBALL, [&] { return "not a horoball: " + gens.back().str(); });
    }
    bool raised = false;
    try {
        common_fixed_point(r.ctx, gens);
    } catch (const NotAllElliptic&) {
        raised = true;
    }
    r.check(raised, [] { return std::string("parabolic family accepted by common_fixed_point"); });
    long p = static_cast<long>(r.p());
    for (const FieldElem& a : {FieldElem(0), FieldElem(1), FieldElem(Rational(1, p)), FieldElem(Rational(1, p * p * p * p))}) {
        for (long s = -2; s <= 6; ++s) {
            BerkPoint x = BerkPoint::disk(a, Rational(s));
            bool all = true;
            for (std::size_t k = 0; k < gens.size(); ++k) {
                bool in = locus_contains(r.ctx, loci[k], x);
                r.check(in == locus_membership(r.ctx, gens[k], x), [&] { return "horoball disagrees with act at " + x.str(); });
                all = all && in;
            }
            r.check(all == (s >= 3), [&] { return "intersection wrong at " + x.str(); });
        }
    }
}

void grp_discreteness(Run& r) {
    long p = static_cast<long>(r.p());
    for (std::size_t i = 0; i < r.n(20); ++i) {
        r.tick();
        MobiusMap C = r.S.conjugator();
        GroupSpec spec{{C * MobiusMap(p * p, 0, 0, 1) * C.inverse(), C * MobiusMap(p * p * p, 0, 0, 1) * C.inverse()}, 3};
        DiscretenessReport rep = discreteness_report(r.ctx, spec);
        r.check(rep.verdict == Verdict::DISCRETE_CERTIFIED, [&] { return "loxodromic group not certified, C = " + C.str(); });
        r.check(rep.min_distance_to_identity && *rep.min_distance_to_identity >= r.one(),
                [&] { return "min |g - I| below 1, C = " + C.str(); });
        spec.generators.push_back(unitary_elliptic(r));
        DiscretenessReport flipped = discreteness_report(r.ctx, spec);
        r.check(flipped.verdict == Verdict::NOT_CERTIFIED && !flipped.unitary_words.empty(),
                [&] { return "unitary generator did not flip the verdict: " + spec.generators.back().str(); });
    }
}

// ---------------------------------------------------------------- cfrac

void cf_unit_case(Run& r) {
    auto check_spec = [&](const CFSpec& spec, const std::string& label) {
        for (std::size_t n = 1; n <= spec.length(); ++n) {
            r.check(is_unitary(r.ctx, convergent_map(spec, n)), [&] { return label + ": T_" + std::to_string(n) + " not unitary"; });
        }
        for (const auto& g : gap_sequence(r.ctx, spec, spec.length())) {
            r.check(g == r.one(), [&] { return label + ": gap " + g.str(); });
        }
        r.check(diverges_classically_unit_case(r.ctx, spec).diverges, [&] { return label + ": certificate did not fire"; });
    };
    r.tick();
    check_spec(CFSpec::unit_ones(50), "all ones");
    for (std::size_t i = 0; i < r.n(20); ++i) {
        r.tick();
        CFSpec spec;
        for (int k = 0; k < 50; ++k) {
            spec.a.push_back(FieldElem(1));
            spec.b.push_back(r.S.integral());
        }
        check_spec(spec, "random spec " + std::to_string(i));
    }
}

void cf_nested(Run& r) {
    for (std::size_t i = 0; i < r.n(50); ++i) {
        r.tick();
        CFSpec spec;
        long len = r.rng.uniform(1, 12);
        for (long k = 0; k < len; ++k) {
            spec.a.push_back(r.S.nonzero());
            spec.b.push_back(r.S.elem());
        }
        CFSpec shift{{spec.a.begin() + 1, spec.a.end()}, {spec.b.begin() + 1, spec.b.end()}};
        MobiusMap t1(FieldElem(0), spec.a[0], FieldElem(1), spec.b[0]);
        for (std::size_t n = 0; n <= spec.length(); ++n) {
            r.check(convergent_value(spec, n) == nested_value(spec, n),
                    [&] { return "composition and nested evaluation differ at n = " + std::to_string(n); });
            if (n >= 1) {
                r.check(convergent_map(spec, n) == t1 * convergent_map(shift, n - 1),
                        [&] { return "shift identity fails at n = " + std::to_string(n); });
            }
        }
    }
}

// ---------------------------------------------------------------- generators

void gen_classes(Run& r) {
    for (ElementClass cls : map_classes()) {
        for (std::size_t i = 0; i < r.n(1000); ++i) {
            r.tick();
            MapNeeds needs{i % 4 == 0};
            MobiusMap g = r.S.map(cls, needs);
            r.check(classify(r.ctx, g) == cls, [&] { return "asked for " + to_string(cls) + ": " + show(g); });
        }
    }
}

struct PropertyDef {
    const char* id;
    const char* description;
    void (*fn)(Run&);
};

const std::vector<PropertyDef>& defs() {
    static const std::vector<PropertyDef> d = {
        {"core.ultrametric", "|x + y| <= max(|x|, |y|), equality when |x| != |y|", core_ultrametric},
        {"core.multiplicative", "|xy| = |x||y|", core_multiplicative},
        {"core.conjugate_symmetry", "|a + b sqrt(D)| = |a - b sqrt(D)| in the non-split case", core_conjugate_symmetry},
        {"core.order_vs_float", "exact magnitude order agrees with floating evaluation", core_order_vs_float},
        {"core.cyclotomic_monotone", "|zeta_{p^k} - 1| increases strictly toward 1", core_cyclotomic},
        {"projective.ultrametric", "chordal metric is an ultrametric bounded by 1", proj_ultrametric},
        {"projective.unitary_isometry", "unitary maps preserve the chordal metric", proj_unitary_isometry},
        {"projective.cross_ratio", "chordal cross ratio is invariant under Mobius maps", proj_cross_ratio},
        {"moebius.unitary_equivalences", "norm 1, L = 1, Gauss fixed, isometry and norm invariance agree on unitary maps", mob_equivalences},
        {"moebius.conjugation_invariance", "classify is invariant under conjugation", mob_conjugation},
        {"moebius.scale_invariance", "norm, M, classify and fixed points ignore scalar multiples", mob_scale},
        {"moebius.lipschitz", "chordal Lipschitz bound |g|^2 holds and is attained by the witness", mob_lipschitz},
        {"moebius.rho0_vs_norm", "rho0(g, I) <= |g - I|", mob_rho0_bound},
        {"moebius.epsilon", "eps/2 <= M <= 6 eps", mob_epsilon},
        {"moebius.epsilon1", "eps1/2 <= M <= eps1", mob_epsilon1},
        {"moebius.epsilon2", "eps2/2 <= M <= eps2 for parabolic maps", mob_epsilon2},
        {"moebius.rho0_exact", "rho0(g, I) = M(g) with witness and no sample above it (p >= 3)", mob_rho0_exact},
        {"moebius.rho0_bracket_p2", "M/2 <= rho0(g, I) <= 2M on samples (p = 2)", mob_rho0_bracket},
        {"moebius.rho0_pair", "rho0(g, h) is attained and dominates samples (p >= 3)", mob_rho0_pair},
        {"moebius.distance_to_unitary", "d(g, U) is 0 on unitary maps and 1 otherwise, with witnesses", mob_distance_to_unitary},
        {"moebius.three_point_convergence", "three-point data converging at rate p^-n recovers the limit", mob_three_point},
        {"berkovich.isometry", "Mobius maps are isometries of the tree", berk_isometry},
        {"berkovich.gauss_displacement", "rho(g Gauss, Gauss) = 2 log_p |g|", berk_displacement},
        {"berkovich.act_composition", "act(g h, x) = act(g, act(h, x))", berk_composition},
        {"berkovich.tree_laws", "join laws, medians and the four-point condition", berk_tree},
        {"berkovich.unitary_iff_gauss", "unitary exactly when the Gauss point is fixed", berk_unitary_gauss},
        {"geometry.involution_census", "axes of involution factors reproduce the class", geo_census},
        {"geometry.orthogonality", "orthogonality is symmetric; orthogonal pairs meet once (p >= 3) or not at all (p = 2)", geo_orthogonal},
        {"geometry.common_perpendicular", "both perpendicular routes give the common perpendicular", geo_perpendicular},
        {"geometry.fixed_locus", "fixed-locus descriptors agree with act on a disk grid, boundary sharp", geo_fixed_locus},
        {"geometry.decomposition", "g = u f with u unitary and f identity or antipodal loxodromic", geo_decompose},
        {"groups.common_fixed_point", "all-elliptic families share a fixed point; a loxodromic is reported", grp_common_fixed_point},
        {"groups.horoball_family", "z + p^-n family is rejected and its horoballs shrink", grp_horoballs},
        {"groups.discreteness", "loxodromic groups are certified; a unitary generator flips the verdict", grp_discreteness},
        {"cfrac.unit_case", "unit-case fractions have unitary convergents, gaps 1 and diverge", cf_unit_case},
        {"cfrac.nested_oracle", "convergents match nested evaluation and the shift identity", cf_nested},
        {"verify.class_generators", "random_map returns the requested class", gen_classes},
    };
    return d;
}

const PropertyDef& def_for(const std::string& id) {
    for (const auto& d : defs()) {
        if (id == d.id) return d;
    }
    throw Error("unknown property: " + id);
}

}  // namespace

const std::vector<std::string>& property_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& d : defs()) v.emplace_back(d.id);
        return v;
    }();
    return ids;
}

std::string property_description(const std::string& id) { return def_for(id).description; }

PropertyResult run_property(const std::string& id, const SuiteConfig& config) {
    const PropertyDef& d = def_for(id);
    long disc = config.disc.value_or(default_disc(config.p));
    Run run(config, disc, id);
    PropertyResult res;
    res.id = d.id;
    res.description = d.description;
    try {
        d.fn(run);
        res.status = Status::PASS;
    } catch (const PropertyFailed& f) {
        res.status = Status::FAIL;
        res.counterexample = f.what;
    } catch (const PropertySkipped& s) {
        res.status = Status::SKIPPED;
        run.note = s.why;
    } catch (const std::exception& e) {
        res.status = Status::FAIL;
        res.counterexample = std::string("unexpected error: ") + e.what();
    }
    res.trials = run.trials;
    res.unsupported = run.unsupported;
    res.note = run.note;
    if (run.unsupported) {
        if (!res.note.empty()) res.note += "; ";
        res.note += std::to_string(run.unsupported) + " draws needed a field extension";
    }
    return res;
}

SuiteReport run_suite(const SuiteConfig& config) {
    SuiteReport rep;
    rep.p = config.p;
    rep.disc = config.disc.value_or(default_disc(config.p));
    rep.seed = config.seed;
    rep.trials = config.trials;
    PadicContext check(config.p, rep.disc);
    (void)check;
    for (const auto& id : property_ids()) rep.results.push_back(run_property(id, config));
    return rep;
}

std::size_t SuiteReport::count(Status s) const {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [&](const PropertyResult& r) { return r.status == s; }));
}

const PropertyResult* SuiteReport::find(const std::string& id) const {
    for (const auto& r : results) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

std::string SuiteReport::text() const {
    std::ostringstream out;
    out << "verify-suite p=" << p << " D=" << disc << " seed=" << seed << " trials=" << trials << "\n";
    for (const auto& r : results) {
        std::string st = to_string(r.status);
        out << st << std::string(8 - st.size(), ' ') << r.id << " (" << r.trials << " trials): " << r.description;
        if (!r.note.empty()) out << " [" << r.note << "]";
        out << "\n";
        if (r.status == Status::FAIL) out << "        counterexample: " << r.counterexample << "\n";
    }
    out << "summary: " << count(Status::PASS) << " passed, " << count(Status::FAIL) << " failed, "
        << count(Status::SKIPPED) << " skipped\n";
    return out.str();
}

json SuiteReport::to_json() const {
    json j{{"p", p}, {"D", disc}, {"seed", seed}, {"trials", trials}};
    json arr = json::array();
    for (const auto& r : results) {
        json e{{"id", r.id}, {"description", r.description}, {"status", to_string(r.status)}, {"trials", r.trials}};
        if (r.status == Status::FAIL) e["counterexample"] = r.counterexample;
        if (!r.note.empty()) e["note"] = r.note;
        arr.push_back(e);
    }
    j["properties"] = arr;
    j["summary"] = {{"passed", count(Status::PASS)}, {"failed", count(Status::FAIL)}, {"skipped", count(Status::SKIPPED)}};
    return j;
}

}  // namespace padic
