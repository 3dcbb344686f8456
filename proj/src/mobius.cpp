#include "padic/mobius.hpp"

#include "padic/errors.hpp"

namespace padic {

namespace {

FieldElem det_of(const Mat2& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

Magnitude displacement(const PadicContext& ctx, const MobiusMap& g, const ProjPoint& z) {
    return chordal(ctx, g(z), z);
}

}  // namespace

MobiusMap::MobiusMap() {
    m_ << FieldElem(1), FieldElem(0), FieldElem(0), FieldElem(1);
    det_ = FieldElem(1);
}

MobiusMap::MobiusMap(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d) {
    m_ << a, b, c, d;
    det_ = det_of(m_);
    if (det_.is_zero()) throw DegenerateConfiguration("singular matrix " + str());
}

MobiusMap::MobiusMap(const Mat2& m) : m_(m), det_(det_of(m)) {
    if (det_.is_zero()) throw DegenerateConfiguration("singular matrix " + str());
}

MobiusMap MobiusMap::operator*(const MobiusMap& h) const {
    Mat2 r = m_ * h.m_;
    return MobiusMap(r);
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d(), -b(), -c(), a()); }

ProjPoint MobiusMap::operator()(const ProjPoint& z) const {
    Vec2 v = m_ * z.homogeneous();
    return ProjPoint::from_homogeneous(v(0), v(1));
}

MobiusMap MobiusMap::scaled(const FieldElem& t) const {
    Mat2 r = m_ * t;
    return MobiusMap(r);
}

MobiusMap MobiusMap::canonical() const {
    for (int i = 0; i < 4; ++i) {
        const FieldElem& e = m_(i / 2, i % 2);
        if (!e.is_zero()) return scaled(FieldElem(1) / e);
    }
    return *this;
}

bool MobiusMap::is_identity() const { return b().is_zero() && c().is_zero() && a() == d(); }

bool operator==(const MobiusMap& g, const MobiusMap& h) {
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            const FieldElem& gi = g.m_(i / 2, i % 2);
            const FieldElem& gj = g.m_(j / 2, j % 2);
            const FieldElem& hi = h.m_(i / 2, i % 2);
            const FieldElem& hj = h.m_(j / 2, j % 2);
            if (gi * hj != gj * hi) return false;
        }
    }
    return true;
}

std::string MobiusMap::str() const {
    return m_(0, 0).str() + "," + m_(0, 1).str() + ";" + m_(1, 0).str() + "," + m_(1, 1).str();
}

MobiusMap parse_map(const std::string& text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw ParseError("map must look like a,b;c,d: " + text);
    auto split = [&](const std::string& row) {
        auto comma = row.find(',');
        if (comma == std::string::npos) throw ParseError("map row needs two entries: " + row);
        return std::pair{parse_field(row.substr(0, comma)), parse_field(row.substr(comma + 1))};
    };
    auto [a, b] = split(text.substr(0, semi));
    auto [c, d] = split(text.substr(semi + 1));
    return MobiusMap(a, b, c, d);
}

std::string to_string(ElementClass c) {
    switch (c) {
        case ElementClass::IDENTITY: return "IDENTITY";
        case ElementClass::PARABOLIC: return "PARABOLIC";
        case ElementClass::TAME_ELLIPTIC: return "TAME_ELLIPTIC";
        case ElementClass::WILD_ELLIPTIC: return "WILD_ELLIPTIC";
        case ElementClass::LOXODROMIC: return "LOXODROMIC";
    }
    return "?";
}

bool is_elliptic(ElementClass c) { return c == ElementClass::TAME_ELLIPTIC || c == ElementClass::WILD_ELLIPTIC; }

FieldElem sigma(const MobiusMap& g) {
    FieldElem t = g.trace();
    return t * t / g.det();
}

ElementClass classify(const PadicContext& ctx, const MobiusMap& g) {
    if (g.is_identity()) return ElementClass::IDENTITY;
    FieldElem s = sigma(g) - FieldElem(4);
    if (s.is_zero()) return ElementClass::PARABOLIC;
    Magnitude m = abs_elem(ctx, s);
    Magnitude one = Magnitude::one(ctx.p());
    if (m > one) return ElementClass::LOXODROMIC;
    if (m == one) return ElementClass::TAME_ELLIPTIC;
    return ElementClass::WILD_ELLIPTIC;
}

Magnitude max_entry(const PadicContext& ctx, const MobiusMap& g) {
    return max(max(abs_elem(ctx, g.a()), abs_elem(ctx, g.b())), max(abs_elem(ctx, g.c()), abs_elem(ctx, g.d())));
}

Magnitude norm(const PadicContext& ctx, const MobiusMap& g) {
    return max_entry(ctx, g) / *abs_elem(ctx, g.det()).sqrt();
}

bool is_unitary(const PadicContext& ctx, const MobiusMap& g) { return norm(ctx, g) == Magnitude::one(ctx.p()); }

Magnitude lipschitz(const PadicContext& ctx, const MobiusMap& g) {
    Magnitude n = norm(ctx, g);
    return n * n;
}

std::pair<ProjPoint, ProjPoint> lipschitz_witness(const PadicContext& ctx, const MobiusMap& g) {
    // Points x with |adj(g) x| maximal pull back to points where g expands most:
    // x = e_j for the adjugate column holding the largest entry, and a
    // p-adically small perturbation of it.
    Magnitude col1 = max(abs_elem(ctx, g.d()), abs_elem(ctx, g.c()));
    Magnitude col2 = max(abs_elem(ctx, g.b()), abs_elem(ctx, g.a()));
    FieldElem pe(Rational(static_cast<long>(ctx.p())));
    ProjPoint x1, x2;
    if (col1 >= col2) {
        x1 = ProjPoint::infinity();
        x2 = ProjPoint(FieldElem(1) / pe);
    } else {
        x1 = ProjPoint(0);
        x2 = ProjPoint(pe);
    }
    MobiusMap inv = g.inverse();
    return {inv(x1), inv(x2)};
}

Rational displacement_gauss(const PadicContext& ctx, const MobiusMap& g) { return 2 * norm(ctx, g).log_p(); }

namespace {

Magnitude difference_entries(const PadicContext& ctx, const MobiusMap& g) {
    FieldElem two(2);
    return max(abs_elem(ctx, g.a() - g.d()), max(abs_elem(ctx, two * g.b()), abs_elem(ctx, two * g.c())));
}

}  // namespace

Magnitude m_norm(const PadicContext& ctx, const MobiusMap& g) {
    return difference_entries(ctx, g) / *abs_elem(ctx, g.det()).sqrt();
}

Magnitude M_norm(const PadicContext& ctx, const MobiusMap& g) { return difference_entries(ctx, g) / max_entry(ctx, g); }

FixedPoints fixed_points(const PadicContext& ctx, const MobiusMap& g) {
    FixedPoints out;
    if (g.is_identity()) {
        out.all = true;
        return out;
    }
    const FieldElem& a = g.a();
    const FieldElem& b = g.b();
    const FieldElem& c = g.c();
    const FieldElem& d = g.d();
    if (c.is_zero()) {
        // c z^2 + (d - a) z - b degenerates: infinity is fixed.
        if (a == d) {
            out.points.push_back(ProjPoint::infinity());
        } else {
            out.points.push_back(ProjPoint(b / (d - a)));
            out.points.push_back(ProjPoint::infinity());
        }
        return out;
    }
    FieldElem disc = (a + d) * (a + d) - FieldElem(4) * g.det();
    FieldElem two_c = FieldElem(2) * c;
    if (disc.is_zero()) {
        out.points.push_back(ProjPoint((a - d) / two_c));
        return out;
    }
    FieldElem root = require_sqrt(ctx, disc, "fixed points of " + g.str());
    out.points.push_back(ProjPoint((a - d + root) / two_c));
    out.points.push_back(ProjPoint((a - d - root) / two_c));
    return out;
}

Rho0 rho0_identity(const PadicContext& ctx, const MobiusMap& g) {
    unsigned long p = ctx.p();
    Rho0 out;
    if (g.is_identity()) {
        out.value = out.lower = out.upper = Magnitude::zero(p);
        out.witness = ProjPoint(0);
        return out;
    }
    Magnitude M = M_norm(ctx, g);
    if (p >= 3) {
        // Q(z) = c z^2 + (d - a) z - b is a nonzero quadratic whose reduction
        // has at most two roots, so one of 0, 1, 2 attains max(|c|,|d-a|,|b|).
        for (int z : {0, 1, 2}) {
            ProjPoint pz(z);
            Magnitude disp = displacement(ctx, g, pz);
            if (disp == M) {
                out.value = out.lower = out.upper = M;
                out.witness = pz;
                return out;
            }
        }
        throw Error("rho0_identity: no witness among 0, 1, 2 for " + g.str());
    }
    out.exact = false;
    out.lower = M / Magnitude::real(p, 2);
    out.upper = M * Magnitude::real(p, 2);
    std::vector<ProjPoint> cands = {ProjPoint(0), ProjPoint(1), ProjPoint::infinity(), ProjPoint(-1),
                                    ProjPoint(2), ProjPoint(Rational(1, 2)), ProjPoint(3), ProjPoint(Rational(1, 3))};
    if (!g.c().is_zero()) {
        cands.push_back(ProjPoint(g.a() / g.c()));
        cands.push_back(ProjPoint(-g.d() / g.c()));
    }
    if (!g.d().is_zero()) cands.push_back(ProjPoint(g.b() / g.d()));
    if (ctx.disc()) cands.push_back(ProjPoint(sqrt_disc(*ctx.disc())));
    out.value = Magnitude::zero(p);
    out.witness = cands.front();
    for (const auto& z : cands) {
        Magnitude disp = displacement(ctx, g, z);
        if (disp > out.value) {
            out.value = disp;
            out.witness = z;
        }
    }
    return out;
}

Rho0 rho0(const PadicContext& ctx, const MobiusMap& g, const MobiusMap& h) {
    return rho0_identity(ctx, g * h.inverse());
}

Magnitude norm_minus_identity(const PadicContext& ctx, const MobiusMap& g) {
    Magnitude n = norm(ctx, g);
    // A lift with norm > 1 keeps that norm after subtracting I.
    if (n > Magnitude::one(ctx.p())) return n;
    FieldElem s = require_sqrt(ctx, g.det(), "determinant-one lift of " + g.str());
    Magnitude best;
    bool first = true;
    for (const FieldElem& t : {s, -s}) {
        Magnitude e = max(max(abs_elem(ctx, g.a() - t), abs_elem(ctx, g.b())),
                          max(abs_elem(ctx, g.c()), abs_elem(ctx, g.d() - t))) /
                      abs_elem(ctx, t);
        if (first || e < best) best = e;
        first = false;
    }
    return best;
}

FieldElem omega(const PadicContext& ctx) {
    FieldElem r = require_sqrt(ctx, FieldElem(-3), "cube roots of unity");
    return (FieldElem(-1) + r) / FieldElem(2);
}

namespace {

Magnitude max_displacement(const PadicContext& ctx, const MobiusMap& g, const std::vector<ProjPoint>& pts) {
    Magnitude best = Magnitude::zero(ctx.p());
    for (const auto& z : pts) best = max(best, displacement(ctx, g, z));
    return best;
}

}  // namespace

Magnitude epsilon(const PadicContext& ctx, const MobiusMap& g) {
    if (g.is_identity()) return Magnitude::zero(ctx.p());
    FieldElem w = omega(ctx);
    return max_displacement(ctx, g, {ProjPoint(1), ProjPoint(w), ProjPoint(w * w)});
}

Magnitude epsilon1(const PadicContext& ctx, const MobiusMap& g) {
    return max_displacement(ctx, g, {ProjPoint(0), ProjPoint(1), ProjPoint::infinity()});
}

Magnitude epsilon2(const PadicContext& ctx, const MobiusMap& g) {
    return max_displacement(ctx, g, {ProjPoint(0), ProjPoint::infinity()});
}

Magnitude d_to_unitary(const PadicContext& ctx, const MobiusMap& g) {
    return is_unitary(ctx, g) ? Magnitude::zero(ctx.p()) : Magnitude::one(ctx.p());
}

std::optional<ProjPoint> d_to_unitary_witness(const PadicContext& ctx, const MobiusMap& g, const MobiusMap& u) {
    Magnitude one = Magnitude::one(ctx.p());
    MobiusMap uinv = u.inverse();
    auto hits = [&](const ProjPoint& z) { return chordal(ctx, g(z), u(z)) == one; };
    std::vector<ProjPoint> cands;
    if (ctx.p() >= 3) {
        // rho(gz, uz) = rho(h w, w) with h = g u^-1 and w = u z.
        cands.push_back(uinv(rho0_identity(ctx, g * uinv).witness));
    }
    cands.push_back(ProjPoint(0));
    cands.push_back(ProjPoint::infinity());
    if (!g.c().is_zero()) cands.push_back(ProjPoint(-g.d() / g.c()));
    for (int z : {1, -1, 2}) cands.push_back(ProjPoint(z));
    for (const ProjPoint& w : {ProjPoint(0), ProjPoint::infinity(), ProjPoint(1), ProjPoint(-1)}) {
        cands.push_back(uinv(w));
        cands.push_back(g.inverse()(w));
    }
    for (const auto& z : cands) {
        if (hits(z)) return z;
    }
    return std::nullopt;
}

MobiusMap mobius_through_three_points(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3,
                                      const ProjPoint& w1, const ProjPoint& w2, const ProjPoint& w3) {
    // A = [l1 v1, l3 v3] with l1 v1 + l3 v3 = v2 sends inf, 1, 0 to the three points.
    auto frame = [](const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
        if (p1 == p2 || p2 == p3 || p1 == p3) throw DegenerateConfiguration("three-point data has repeated points");
        Vec2 v1 = p1.homogeneous(), v2 = p2.homogeneous(), v3 = p3.homogeneous();
        FieldElem den = v1(0) * v3(1) - v1(1) * v3(0);
        FieldElem l1 = (v2(0) * v3(1) - v2(1) * v3(0)) / den;
        FieldElem l3 = (v1(0) * v2(1) - v1(1) * v2(0)) / den;
        return MobiusMap(l1 * v1(0), l3 * v3(0), l1 * v1(1), l3 * v3(1));
    };
    return frame(w1, w2, w3) * frame(z1, z2, z3).inverse();
}

}  // namespace padic
