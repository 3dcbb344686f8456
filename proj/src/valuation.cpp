#include "padic/valuation.hpp"

#include "padic/errors.hpp"

namespace padic {

namespace {

Rational split_valuation(const PadicContext& ctx, const FieldElem& x) {
    // sqrt(D) = p^m * s with s a unit; x = a + B s with B = b p^m.
    const SquareClass& root = ctx.disc_root();
    unsigned long p = ctx.p();
    Rational B = x.b() * rational_pow(p, root.half_valuation);
    Rational vb = *vp(B, p);
    Valuation va = vp(x.a(), p);
    if (!va || *va != vb) return va ? std::min(*va, vb) : vb;
    for (long k = 1; k <= ctx.precision_cap(); ++k) {
        Rational approx = x.a() + B * Rational(root.root->residue(k));
        Valuation v = vp(approx, p);
        if (v && *v < vb + k) return *v;
    }
    throw PrecisionExhausted("valuation of " + x.str() + " not determined within " +
                             std::to_string(ctx.precision_cap()) + " digits");
}

}  // namespace

Valuation valuation(const PadicContext& ctx, const FieldElem& x) {
    if (x.is_zero()) return std::nullopt;
    if (x.is_rational()) return vp(x.a(), ctx.p());
    if (!ctx.disc() || *ctx.disc() != x.disc()) {
        throw UnsupportedExtension("element " + x.str() + " lies outside the context field", x.disc());
    }
    if (ctx.split()) return split_valuation(ctx, x);
    return *vp(x.norm(), ctx.p()) / 2;
}

Magnitude abs_elem(const PadicContext& ctx, const FieldElem& x) {
    Valuation v = valuation(ctx, x);
    if (!v) return Magnitude::zero(ctx.p());
    return Magnitude::power(ctx.p(), -*v);
}

Rational log_abs(const PadicContext& ctx, const FieldElem& x) {
    Valuation v = valuation(ctx, x);
    if (!v) throw DegenerateConfiguration("log |0|");
    return -*v;
}

Magnitude cyclotomic_valuation(unsigned long p, unsigned long d) {
    if (d < 2) throw Error("cyclotomic_valuation needs d >= 2");
    unsigned long k = 0;
    unsigned long m = d;
    while (m % p == 0) {
        m /= p;
        ++k;
    }
    if (m != 1) return Magnitude::one(p);
    // |zeta - 1| = p^(-1/(p^(k-1)(p-1))).
    Integer denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), p, k - 1);
    denom *= (p - 1);
    Rational e(Integer(-1), denom);
    e.canonicalize();
    return Magnitude::power(p, e);
}

long squarefree_part(const Rational& x) {
    if (x == 0) throw Error("squarefree_part of zero");
    Integer n = x.get_num() * x.get_den();
    long sign = n < 0 ? -1 : 1;
    Integer m = abs(n);
    Integer out = 1;
    // Trial division is bounded; beyond it the cofactor is kept whole.
    for (Integer q = 2; q * q <= m && q < 100000; ++q) {
        int e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        if (e % 2 == 1) out *= q;
    }
    if (!mpz_perfect_square_p(m.get_mpz_t())) out *= m;
    if (!out.fits_slong_p()) throw Error("squarefree part too large");
    return sign * out.get_si();
}

std::optional<FieldElem> sqrt_field(const PadicContext& ctx, const FieldElem& x) {
    if (x.is_zero()) return FieldElem(0);
    if (x.is_rational()) {
        if (auto r = rational_sqrt(x.a())) return FieldElem(*r);
        if (ctx.disc()) {
            long D = *ctx.disc();
            if (auto r = rational_sqrt(x.a() / Rational(D))) return FieldElem(Rational(0), *r, D);
        }
        return std::nullopt;
    }
    if (!ctx.disc() || *ctx.disc() != x.disc()) return std::nullopt;
    long D = x.disc();
    auto n = rational_sqrt(x.norm());
    if (!n) return std::nullopt;
    for (int sign : {1, -1}) {
        Rational u2 = (x.a() + sign * *n) / 2;
        auto u = rational_sqrt(u2);
        if (!u || *u == 0) continue;
        FieldElem cand(*u, x.b() / (2 * *u), D);
        if (cand * cand == x) return cand;
    }
    return std::nullopt;
}

FieldElem require_sqrt(const PadicContext& ctx, const FieldElem& x, const std::string& what) {
    if (auto r = sqrt_field(ctx, x)) return *r;
    std::optional<long> need;
    if (x.is_rational()) {
        try {
            need = squarefree_part(x.a());
        } catch (const Error&) {
            need.reset();
        }
    }
    throw UnsupportedExtension(what + ": sqrt(" + x.str() + ") is outside the working field" +
                                   (need ? " (needs D = " + std::to_string(*need) + ")" : ""),
                               need);
}

}  // namespace padic
