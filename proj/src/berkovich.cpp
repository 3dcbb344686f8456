#include "padic/berkovich.hpp"

#include <algorithm>

#include "padic/errors.hpp"

namespace padic {

BerkPoint BerkPoint::type1(const ProjPoint& z) {
    BerkPoint x;
    x.type1_ = true;
    x.point_ = z;
    if (!z.is_inf()) x.center_ = z.x();
    return x;
}

BerkPoint BerkPoint::disk(const FieldElem& center, const Rational& radius_exp) {
    BerkPoint x;
    x.center_ = center;
    x.radius_exp_ = radius_exp;
    x.radius_exp_.canonicalize();
    return x;
}

const ProjPoint& BerkPoint::point() const {
    if (!type1_) throw WrongClass("type II point has no P^1 coordinate");
    return point_;
}

const FieldElem& BerkPoint::center() const {
    if (is_infinity()) throw DegenerateConfiguration("infinity has no center");
    return center_;
}

const Rational& BerkPoint::radius_exp() const {
    if (type1_) throw TypeIPoint("type I point " + point_.str() + " has no radius");
    return radius_exp_;
}

std::string BerkPoint::str() const {
    if (type1_) return point_.str();
    if (center_.is_zero() && radius_exp_ == 0) return "gauss";
    return "D(" + center_.str() + ", p^" + to_string(radius_exp_) + ")";
}

BerkPoint parse_berk(const std::string& text, unsigned long p) {
    std::string s;
    for (char c : text) {
        if (c != ' ') s.push_back(c);
    }
    if (s == "gauss" || s == "Gauss") return BerkPoint::gauss();
    if (s.rfind("D(", 0) == 0 && s.back() == ')') {
        std::string body = s.substr(2, s.size() - 3);
        auto comma = body.rfind(',');
        if (comma == std::string::npos) throw ParseError("disk needs a radius: " + text);
        std::string radius = body.substr(comma + 1);
        auto caret = radius.find('^');
        if (caret == std::string::npos) throw ParseError("radius must be p^s: " + text);
        std::string base = radius.substr(0, caret);
        if (base != "p" && base != std::to_string(p)) throw ParseError("radius base must be p: " + text);
        std::string e = radius.substr(caret + 1);
        if (e.size() >= 2 && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
        return BerkPoint::disk(parse_field(body.substr(0, comma)), parse_rational(e));
    }
    return BerkPoint::type1(parse_point(s));
}

namespace {

// log_p |x - y|, or nullopt when x = y.
std::optional<Rational> log_gap(const PadicContext& ctx, const FieldElem& x, const FieldElem& y) {
    FieldElem d = x - y;
    if (d.is_zero()) return std::nullopt;
    return log_abs(ctx, d);
}

void require_finite(const BerkPoint& x, const char* what) {
    if (x.is_infinity()) throw DegenerateConfiguration(std::string(what) + ": infinity is not allowed");
}

}  // namespace

bool same_point(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y) {
    if (x.is_type1() != y.is_type1()) return false;
    if (x.is_type1()) return x.point() == y.point();
    if (x.radius_exp() != y.radius_exp()) return false;
    auto g = log_gap(ctx, x.center(), y.center());
    return !g || *g <= x.radius_exp();
}

bool below(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y) {
    if (y.is_infinity()) return true;
    if (x.is_infinity()) return false;
    if (y.is_type1()) return x.is_type1() && x.point() == y.point();
    if (!x.is_type1() && x.radius_exp() > y.radius_exp()) return false;
    auto g = log_gap(ctx, x.center(), y.center());
    return !g || *g <= y.radius_exp();
}

BerkPoint join(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y) {
    require_finite(x, "join");
    require_finite(y, "join");
    auto g = log_gap(ctx, x.center(), y.center());
    std::optional<Rational> s = g;
    if (!x.is_type1()) s = s ? std::max(*s, x.radius_exp()) : x.radius_exp();
    if (!y.is_type1()) s = s ? std::max(*s, y.radius_exp()) : y.radius_exp();
    if (!s) return x;  // the same type I point
    return BerkPoint::disk(x.center(), *s);
}

Rational hyp_dist(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y) {
    if (x.is_type1() || y.is_type1()) {
        throw TypeIPoint("hyperbolic distance to a type I point is infinite");
    }
    BerkPoint j = join(ctx, x, y);
    return 2 * j.radius_exp() - x.radius_exp() - y.radius_exp();
}

BerkPoint median(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y, const BerkPoint& z) {
    int inf = x.is_infinity() + y.is_infinity() + z.is_infinity();
    if (inf >= 2) return BerkPoint::type1(ProjPoint::infinity());
    if (x.is_infinity()) return join(ctx, y, z);
    if (y.is_infinity()) return join(ctx, x, z);
    if (z.is_infinity()) return join(ctx, x, y);
    // Two of the pairwise joins coincide; the median is the lowest one.
    BerkPoint js[3] = {join(ctx, x, y), join(ctx, x, z), join(ctx, y, z)};
    const BerkPoint* best = &js[0];
    for (const auto& j : js) {
        if (j.is_type1()) return j;
        if (j.radius_exp() < best->radius_exp()) best = &j;
    }
    return *best;
}

bool on_segment(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& a, const BerkPoint& b) {
    return same_point(ctx, median(ctx, a, b, x), x);
}

BerkPoint point_along(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y, const Rational& t) {
    if (t < 0) throw Error("point_along: negative distance");
    Rational sx = x.radius_exp();
    if (y.is_infinity()) return BerkPoint::disk(x.center(), sx + t);
    BerkPoint j = join(ctx, x, y);
    Rational up = j.radius_exp() - sx;
    if (t <= up) return BerkPoint::disk(x.center(), sx + t);
    Rational s = j.radius_exp() - (t - up);
    if (!y.is_type1() && s < y.radius_exp()) throw Error("point_along: distance beyond the segment");
    return BerkPoint::disk(y.center(), s);
}

namespace {

// z -> alpha z + beta.
BerkPoint act_affine(const PadicContext& ctx, const FieldElem& alpha, const FieldElem& beta, const BerkPoint& x) {
    return BerkPoint::disk(alpha * x.center() + beta, x.radius_exp() + log_abs(ctx, alpha));
}

// z -> 1/z on a type II point.
BerkPoint act_inversion(const PadicContext& ctx, const BerkPoint& x) {
    const FieldElem& w = x.center();
    const Rational& s = x.radius_exp();
    if (!w.is_zero()) {
        Rational lw = log_abs(ctx, w);
        if (lw > s) return BerkPoint::disk(FieldElem(1) / w, s - 2 * lw);
    }
    return BerkPoint::disk(FieldElem(0), -s);
}

}  // namespace

BerkPoint act(const PadicContext& ctx, const MobiusMap& g, const BerkPoint& x) {
    if (x.is_type1()) return BerkPoint::type1(g(x.point()));
    if (g.c().is_zero()) return act_affine(ctx, g.a() / g.d(), g.b() / g.d(), x);
    // g = A2 o inv o A1 with A1 = c z + d and A2(u) = a/c - (det/c) u.
    BerkPoint y = act_affine(ctx, g.c(), g.d(), x);
    y = act_inversion(ctx, y);
    return act_affine(ctx, -g.det() / g.c(), g.a() / g.c(), y);
}

bool fixes_gauss(const PadicContext& ctx, const MobiusMap& g) {
    return same_point(ctx, act(ctx, g, BerkPoint::gauss()), BerkPoint::gauss());
}

MobiusMap conjugator_to_gauss(const PadicContext& ctx, const BerkPoint& x) {
    if (x.is_type1()) throw TypeIPoint("conjugator_to_gauss needs a type II point");
    const Rational& s = x.radius_exp();
    unsigned long p = ctx.p();
    FieldElem rho;
    if (s.get_den() == 1) {
        rho = FieldElem(rational_pow(p, -s.get_num().get_si()));
    } else if (s.get_den() == 2) {
        // sqrt(D) p^m has |.| = p^(-vp(D)/2 - m).
        std::optional<long> vD;
        if (ctx.disc()) vD = vp(Rational(*ctx.disc()), p)->get_num().get_si();
        if (!vD || *vD % 2 == 0) {
            throw UnsupportedExtension("radius p^" + to_string(s) + " needs a ramified extension",
                                       static_cast<long>(p));
        }
        Rational m = -s - Rational(*vD, 2);
        rho = sqrt_disc(*ctx.disc()) * FieldElem(rational_pow(p, m.get_num().get_si()));
    } else {
        throw UnsupportedExtension("radius p^" + to_string(s) + " is not in the value group of the field");
    }
    return MobiusMap(FieldElem(1), -x.center(), FieldElem(0), rho);
}

}  // namespace padic
