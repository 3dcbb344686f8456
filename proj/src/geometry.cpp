#include "padic/geometry.hpp"

#include "padic/errors.hpp"

namespace padic {

namespace {

BerkPoint pt(const ProjPoint& z) { return BerkPoint::type1(z); }

}  // namespace

bool same_geodesic(const Geodesic& A, const Geodesic& B) {
    return (A.alpha == B.alpha && A.beta == B.beta) || (A.alpha == B.beta && A.beta == B.alpha);
}

std::string to_string(const Geodesic& A) { return "geo(" + A.alpha.str() + ", " + A.beta.str() + ")"; }

BerkPoint project(const PadicContext& ctx, const Geodesic& A, const BerkPoint& x) {
    return median(ctx, pt(A.alpha), pt(A.beta), x);
}

Rational dist_to_geodesic(const PadicContext& ctx, const Geodesic& A, const BerkPoint& x) {
    return hyp_dist(ctx, x, project(ctx, A, x));
}

bool on_geodesic(const PadicContext& ctx, const Geodesic& A, const BerkPoint& x) {
    return on_segment(ctx, x, pt(A.alpha), pt(A.beta));
}

bool arcs_meet(const PadicContext& ctx, const BerkPoint& a, const BerkPoint& b, const BerkPoint& c,
               const BerkPoint& d) {
    // Any path from c into [a, b] enters through the projection of c.
    return on_segment(ctx, median(ctx, a, b, c), c, d);
}

bool geodesics_meet(const PadicContext& ctx, const Geodesic& A, const Geodesic& B) {
    return arcs_meet(ctx, pt(A.alpha), pt(A.beta), pt(B.alpha), pt(B.beta));
}

MobiusMap frame_map(const ProjPoint& alpha, const ProjPoint& beta) {
    if (alpha == beta) throw DegenerateConfiguration("frame_map needs distinct points");
    if (beta.is_inf()) return MobiusMap(FieldElem(1), alpha.x(), FieldElem(0), FieldElem(1));
    if (alpha.is_inf()) return MobiusMap(beta.x(), FieldElem(1), FieldElem(1), FieldElem(0));
    return MobiusMap(beta.x(), alpha.x(), FieldElem(1), FieldElem(1));
}

Geodesic axis(const PadicContext& ctx, const MobiusMap& g) {
    ElementClass c = classify(ctx, g);
    if (c == ElementClass::IDENTITY || c == ElementClass::PARABOLIC) {
        throw WrongClass("axis of a " + to_string(c) + " map is undefined");
    }
    FixedPoints fp = fixed_points(ctx, g);
    return {fp.points.at(0), fp.points.at(1)};
}

MobiusMap involution_with_fixed_points(const ProjPoint& alpha, const ProjPoint& beta) {
    if (alpha == beta) throw DegenerateConfiguration("involution needs distinct fixed points");
    if (alpha.is_inf() || beta.is_inf()) {
        const FieldElem& x = alpha.is_inf() ? beta.x() : alpha.x();
        return MobiusMap(FieldElem(-1), FieldElem(2) * x, FieldElem(0), FieldElem(1));
    }
    const FieldElem& a = alpha.x();
    const FieldElem& b = beta.x();
    return MobiusMap(a + b, FieldElem(-2) * a * b, FieldElem(2), -(a + b));
}

bool is_involution(const MobiusMap& f) { return !f.is_identity() && (f * f).is_identity(); }

InvolutionPair factor_involutions(const PadicContext& ctx, const MobiusMap& g, const FieldElem& b_squared) {
    ElementClass cls = classify(ctx, g);
    if (cls == ElementClass::IDENTITY) throw WrongClass("the identity has no involution factorization");
    FixedPoints fp = fixed_points(ctx, g);
    if (cls == ElementClass::PARABOLIC) {
        // Conjugate to z + 1 and use f = -z, h = -z - 1.
        const ProjPoint& xi = fp.points.at(0);
        MobiusMap C = xi.is_inf() ? MobiusMap() : MobiusMap(xi.x(), FieldElem(1), FieldElem(1), FieldElem(0));
        MobiusMap n = C.inverse() * g * C;
        FieldElem shift = n.b() / n.d();
        C = C * MobiusMap(shift, FieldElem(0), FieldElem(0), FieldElem(1));
        MobiusMap f0(FieldElem(-1), FieldElem(0), FieldElem(0), FieldElem(1));
        MobiusMap h0(FieldElem(-1), FieldElem(-1), FieldElem(0), FieldElem(1));
        return {C * f0 * C.inverse(), C * h0 * C.inverse()};
    }
    MobiusMap C = frame_map(fp.points.at(0), fp.points.at(1));
    MobiusMap n = C.inverse() * g * C;
    if (!n.b().is_zero() || !n.c().is_zero()) throw Error("factor_involutions: conjugate is not diagonal");
    FieldElem k = n.a() / n.d();
    MobiusMap h0(FieldElem(0), -b_squared, FieldElem(1), FieldElem(0));
    MobiusMap f0(FieldElem(0), -k * b_squared, FieldElem(1), FieldElem(0));
    return {C * f0 * C.inverse(), C * h0 * C.inverse()};
}

bool is_orthogonal(const PadicContext&, const Geodesic& A, const Geodesic& B) {
    if (A.alpha == A.beta || B.alpha == B.beta) return false;
    MobiusMap f = involution_with_fixed_points(B.alpha, B.beta);
    return f(A.alpha) == A.beta && f(A.beta) == A.alpha;
}

namespace {

void require_distinct(const Geodesic& A, const Geodesic& B) {
    const ProjPoint* e[4] = {&A.alpha, &A.beta, &B.alpha, &B.beta};
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (*e[i] == *e[j]) throw DegenerateConfiguration("common perpendicular needs four distinct endpoints");
        }
    }
}

}  // namespace

Geodesic common_perpendicular_root(const PadicContext& ctx, const Geodesic& A, const Geodesic& B) {
    require_distinct(A, B);
    MobiusMap C = frame_map(A.alpha, A.beta);
    MobiusMap Ci = C.inverse();
    FieldElem a = Ci(B.alpha).x();
    FieldElem b = Ci(B.beta).x();
    FieldElem r = require_sqrt(ctx, a * b, "common perpendicular");
    return {C(ProjPoint(r)), C(ProjPoint(-r))};
}

Geodesic common_perpendicular_balanced(const PadicContext& ctx, const Geodesic& A, const Geodesic& B) {
    require_distinct(A, B);
    MobiusMap Ci = frame_map(A.alpha, A.beta).inverse();
    // (z - c)/(z + c) sends 0, inf to -1, 1; pick c keeping B's image finite.
    ProjPoint u = Ci(B.alpha), v = Ci(B.beta);
    int c = 1;
    while ((!u.is_inf() && u.x() == FieldElem(-c)) || (!v.is_inf() && v.x() == FieldElem(-c))) ++c;
    MobiusMap N = MobiusMap(FieldElem(1), FieldElem(-c), FieldElem(1), FieldElem(c)) * Ci;
    FieldElem s = N(B.alpha).x();
    FieldElem t = N(B.beta).x();
    // f = (z + r)/(r z + 1) fixes -1 and 1; f(s) + f(t) = 0 reads
    // (s + t) r^2 + 2 (st + 1) r + (s + t) = 0.
    FieldElem sum = s + t;
    FieldElem one(1);
    MobiusMap Ni = N.inverse();
    if (sum.is_zero()) return {Ni(ProjPoint(0)), Ni(ProjPoint::infinity())};
    FieldElem q = s * t + one;
    FieldElem disc = q * q - sum * sum;
    FieldElem root = require_sqrt(ctx, disc, "balanced common perpendicular");
    FieldElem r = (-q + root) / sum;
    // The perpendicular is f^-1 of (0, inf): the points -r and -1/r.
    return {Ni(ProjPoint(-r)), Ni(ProjPoint(-one / r))};
}

Geodesic common_perpendicular(const PadicContext& ctx, const Geodesic& A, const Geodesic& B) {
    if (ctx.p() == 2) return common_perpendicular_balanced(ctx, A, B);
    return common_perpendicular_root(ctx, A, B);
}

std::string to_string(FixedLocus::Kind k) {
    switch (k) {
        case FixedLocus::Kind::TWO_POINTS: return "TWO_POINTS";
        case FixedLocus::Kind::AXIS: return "AXIS";
        case FixedLocus::Kind::TUBE: return "TUBE";
        case FixedLocus::Kind::HOROBALL: return "HOROBALL";
        case FixedLocus::Kind::ALL: return "ALL";
    }
    return "?";
}

std::string to_string(const FixedLocus& F) {
    switch (F.kind) {
        case FixedLocus::Kind::TWO_POINTS:
            return "TWO_POINTS(" + F.geodesic.alpha.str() + ", " + F.geodesic.beta.str() + ")";
        case FixedLocus::Kind::AXIS: return "AXIS(" + to_string(F.geodesic) + ")";
        case FixedLocus::Kind::TUBE: return "TUBE(" + to_string(F.geodesic) + ", " + to_string(F.radius) + ")";
        case FixedLocus::Kind::HOROBALL: return "HOROBALL(" + F.fixed_point.str() + ", " + F.boundary.str() + ")";
        case FixedLocus::Kind::ALL: return "ALL";
    }
    return "?";
}

FixedLocus fixed_locus(const PadicContext& ctx, const MobiusMap& g) {
    FixedLocus F;
    ElementClass cls = classify(ctx, g);
    switch (cls) {
        case ElementClass::IDENTITY: F.kind = FixedLocus::Kind::ALL; return F;
        case ElementClass::LOXODROMIC:
            F.kind = FixedLocus::Kind::TWO_POINTS;
            F.geodesic = axis(ctx, g);
            return F;
        case ElementClass::TAME_ELLIPTIC:
            F.kind = FixedLocus::Kind::AXIS;
            F.geodesic = axis(ctx, g);
            return F;
        case ElementClass::WILD_ELLIPTIC:
            F.kind = FixedLocus::Kind::TUBE;
            F.geodesic = axis(ctx, g);
            F.radius = -log_abs(ctx, sigma(g) - FieldElem(4)) / 2;
            return F;
        case ElementClass::PARABOLIC: {
            F.kind = FixedLocus::Kind::HOROBALL;
            F.fixed_point = fixed_points(ctx, g).points.at(0);
            const ProjPoint& xi = F.fixed_point;
            MobiusMap C = xi.is_inf() ? MobiusMap() : MobiusMap(xi.x(), FieldElem(1), FieldElem(1), FieldElem(0));
            MobiusMap n = C.inverse() * g * C;
            FieldElem shift = n.b() / n.d();
            F.boundary = act(ctx, C, BerkPoint::disk(FieldElem(0), log_abs(ctx, shift)));
            return F;
        }
    }
    return F;
}

bool locus_contains(const PadicContext& ctx, const FixedLocus& F, const BerkPoint& x) {
    using K = FixedLocus::Kind;
    if (F.kind == K::ALL) return true;
    if (x.is_type1()) {
        if (F.kind == K::HOROBALL) return x.point() == F.fixed_point;
        return x.point() == F.geodesic.alpha || x.point() == F.geodesic.beta;
    }
    switch (F.kind) {
        case K::TWO_POINTS: return false;
        case K::AXIS: return on_geodesic(ctx, F.geodesic, x);
        case K::TUBE: return dist_to_geodesic(ctx, F.geodesic, x) <= F.radius;
        case K::HOROBALL: {
            BerkPoint m = median(ctx, x, F.boundary, pt(F.fixed_point));
            return hyp_dist(ctx, x, m) <= hyp_dist(ctx, F.boundary, m);
        }
        default: return true;
    }
}

bool locus_membership(const PadicContext& ctx, const MobiusMap& g, const BerkPoint& x) {
    return same_point(ctx, act(ctx, g, x), x);
}

BerkPoint locus_point(const PadicContext& ctx, const FixedLocus& F) {
    using K = FixedLocus::Kind;
    if (F.kind == K::ALL) return BerkPoint::gauss();
    if (F.kind == K::AXIS || F.kind == K::TUBE) return project(ctx, F.geodesic, BerkPoint::gauss());
    if (F.kind == K::HOROBALL) return F.boundary;
    throw WrongClass("a loxodromic locus has no point in H_Ber");
}

std::optional<BerkPoint> locus_intersect(const PadicContext& ctx, const FixedLocus& F1, const FixedLocus& F2) {
    using K = FixedLocus::Kind;
    if (F1.kind == K::ALL) return locus_point(ctx, F2);
    if (F2.kind == K::ALL) return locus_point(ctx, F1);
    auto tube_like = [](const FixedLocus& F) { return F.kind == K::AXIS || F.kind == K::TUBE; };
    if (!tube_like(F1) || !tube_like(F2)) throw WrongClass("locus_intersect expects elliptic loci");
    const Geodesic& G1 = F1.geodesic;
    const Geodesic& G2 = F2.geodesic;
    BerkPoint a1 = pt(G1.alpha), b1 = pt(G1.beta), a2 = pt(G2.alpha), b2 = pt(G2.beta);
    if (same_geodesic(G1, G2)) return median(ctx, a1, b1, BerkPoint::gauss());
    // The projections of G2's endpoints onto G1 bound the overlap when the lines meet.
    for (const BerkPoint& m : {median(ctx, a1, b1, a2), median(ctx, a1, b1, b2)}) {
        if (!m.is_type1() && on_geodesic(ctx, G2, m)) return m;
    }
    BerkPoint q1 = median(ctx, a1, b1, a2);
    BerkPoint q2 = median(ctx, a2, b2, a1);
    if (q1.is_type1() || q2.is_type1()) return std::nullopt;
    Rational L = hyp_dist(ctx, q1, q2);
    if (L > F1.radius + F2.radius) return std::nullopt;
    return point_along(ctx, q1, q2, std::min(F1.radius, L));
}

TailedAxis tailed_axis(const PadicContext& ctx, const MobiusMap& f) {
    if (ctx.p() != 2) throw WrongClass("tailed axes are defined for p = 2 only");
    if (!is_involution(f)) throw WrongClass("tailed_axis needs an involution");
    Geodesic A = axis(ctx, f);
    if (A.alpha.is_inf() || A.beta.is_inf()) {
        const FieldElem& x = A.alpha.is_inf() ? A.beta.x() : A.alpha.x();
        return {A, BerkPoint::disk(x + FieldElem(1), Rational(-1))};
    }
    FieldElem mid = (A.alpha.x() + A.beta.x()) / FieldElem(2);
    return {A, BerkPoint::disk(mid, log_abs(ctx, A.alpha.x() - A.beta.x()) + 1)};
}

TailedAxis tailed_axis(const PadicContext& ctx, const MobiusMap& f, const Geodesic& reference) {
    if (ctx.p() != 2) throw WrongClass("tailed axes are defined for p = 2 only");
    if (!is_involution(f)) throw WrongClass("tailed_axis needs an involution");
    Geodesic A = axis(ctx, f);
    return {A, median(ctx, pt(reference.alpha), pt(reference.beta), pt(A.alpha))};
}

bool tailed_axes_meet(const PadicContext& ctx, const TailedAxis& A, const TailedAxis& B) {
    BerkPoint a1 = pt(A.geodesic.alpha), b1 = pt(A.geodesic.beta);
    BerkPoint a2 = pt(B.geodesic.alpha), b2 = pt(B.geodesic.beta);
    BerkPoint foot1 = project(ctx, A.geodesic, A.tail);
    BerkPoint foot2 = project(ctx, B.geodesic, B.tail);
    return arcs_meet(ctx, a1, b1, a2, b2) || arcs_meet(ctx, a1, b1, B.tail, foot2) ||
           arcs_meet(ctx, A.tail, foot1, a2, b2) || arcs_meet(ctx, A.tail, foot1, B.tail, foot2);
}

std::optional<MobiusMap> antipodal_witness(const PadicContext& ctx, const ProjPoint& alpha, const ProjPoint& beta) {
    if (alpha == beta) throw DegenerateConfiguration("antipodal_witness needs distinct points");
    if (chordal(ctx, alpha, beta) != Magnitude::one(ctx.p())) return std::nullopt;
    // Columns are primitive vectors of beta and alpha; their wedge is a unit.
    auto primitive = [&](const ProjPoint& z) -> Vec2 {
        Vec2 v;
        if (z.is_inf()) {
            v << FieldElem(1), FieldElem(0);
        } else if (abs_elem(ctx, z.x()) <= Magnitude::one(ctx.p())) {
            v << z.x(), FieldElem(1);
        } else {
            v << FieldElem(1), FieldElem(1) / z.x();
        }
        return v;
    };
    Vec2 vb = primitive(beta), va = primitive(alpha);
    return MobiusMap(vb(0), va(0), vb(1), va(1));
}

Decomposition decompose_unitary_loxodromic(const PadicContext& ctx, const MobiusMap& g) {
    // Cartan form over the valuation ring: L g R = diag(d1, d2) with L, R unitary,
    // then g = (L^-1 R^-1)(R diag R^-1).
    const Mat2& G = g.matrix();
    int bi = 0, bj = 0;
    Magnitude best = abs_elem(ctx, G(0, 0));
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            Magnitude m = abs_elem(ctx, G(i, j));
            if (m > best) {
                best = m;
                bi = i;
                bj = j;
            }
        }
    }
    MobiusMap swap(FieldElem(0), FieldElem(1), FieldElem(1), FieldElem(0));
    MobiusMap Pr = bi ? swap : MobiusMap();
    MobiusMap Pc = bj ? swap : MobiusMap();
    MobiusMap Gp = Pr * g * Pc;
    const FieldElem& m = Gp.a();
    MobiusMap L0(FieldElem(1), FieldElem(0), -Gp.c() / m, FieldElem(1));
    MobiusMap R0(FieldElem(1), -Gp.b() / m, FieldElem(0), FieldElem(1));
    MobiusMap L = L0 * Pr;
    MobiusMap R = Pc * R0;
    MobiusMap D = L * g * R;
    if (abs_elem(ctx, D.a()) == abs_elem(ctx, D.d())) return {g, MobiusMap()};
    MobiusMap u = L.inverse() * R.inverse();
    MobiusMap f = R * D * R.inverse();
    return {u, f};
}

}  // namespace padic
