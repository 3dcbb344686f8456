#include "padic/projective.hpp"

#include "padic/errors.hpp"

namespace padic {

ProjPoint ProjPoint::infinity() {
    ProjPoint z;
    z.inf_ = true;
    return z;
}

ProjPoint ProjPoint::from_homogeneous(const FieldElem& x, const FieldElem& y) {
    if (y.is_zero()) {
        if (x.is_zero()) throw DegenerateConfiguration("homogeneous pair (0, 0)");
        return infinity();
    }
    return ProjPoint(x / y);
}

const FieldElem& ProjPoint::x() const {
    if (inf_) throw DegenerateConfiguration("affine coordinate of infinity");
    return x_;
}

Vec2 ProjPoint::homogeneous() const {
    Vec2 v;
    if (inf_) {
        v << FieldElem(1), FieldElem(0);
    } else {
        v << x_, FieldElem(1);
    }
    return v;
}

std::string ProjPoint::str() const { return inf_ ? "inf" : x_.str(); }

ProjPoint parse_point(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s.push_back(c);
    }
    if (s == "inf" || s == "infinity" || s == "oo") return ProjPoint::infinity();
    return ProjPoint(parse_field(s));
}

Magnitude vec_norm(const PadicContext& ctx, const Vec2& v) {
    return max(abs_elem(ctx, v(0)), abs_elem(ctx, v(1)));
}

Magnitude chordal(const PadicContext& ctx, const ProjPoint& z, const ProjPoint& w) {
    unsigned long p = ctx.p();
    if (z.is_inf() && w.is_inf()) return Magnitude::zero(p);
    if (z.is_inf() || w.is_inf()) {
        // rho(z, inf) = 1 / max(1, |z|).
        const FieldElem& f = z.is_inf() ? w.x() : z.x();
        return Magnitude::one(p) / max(Magnitude::one(p), abs_elem(ctx, f));
    }
    Magnitude num = abs_elem(ctx, z.x() - w.x());
    Magnitude one = Magnitude::one(p);
    return num / (max(one, abs_elem(ctx, z.x())) * max(one, abs_elem(ctx, w.x())));
}

Magnitude cross_ratio_chordal(const PadicContext& ctx, const ProjPoint& x, const ProjPoint& y,
                              const ProjPoint& z, const ProjPoint& w) {
    Magnitude den = chordal(ctx, x, z) * chordal(ctx, y, w);
    if (den.is_zero()) throw DegenerateConfiguration("cross ratio with coincident points");
    return chordal(ctx, x, y) * chordal(ctx, z, w) / den;
}

}  // namespace padic
