#pragma once

#include <string>

#include "padic/mobius.hpp"

namespace padic {

/// Type I point of P^1 or type II point D(center, p^radius_exp) of the Berkovich line.
class BerkPoint {
public:
    BerkPoint() = default;

    static BerkPoint type1(const ProjPoint& z);
    static BerkPoint disk(const FieldElem& center, const Rational& radius_exp);
    static BerkPoint gauss() { return disk(FieldElem(0), Rational(0)); }

    bool is_type1() const { return type1_; }
    bool is_infinity() const { return type1_ && point_.is_inf(); }
    const ProjPoint& point() const;
    /// Center of a type II disk, or the coordinate of a finite type I point.
    const FieldElem& center() const;
    const Rational& radius_exp() const;

    /// "inf", a field element, or "D(a, p^s)".
    std::string str() const;

private:
    bool type1_ = false;
    ProjPoint point_;
    FieldElem center_;
    Rational radius_exp_ = 0;
};

/// Parses "gauss", "D(a, p^s)" (p literal or numeric) or a type I point.
BerkPoint parse_berk(const std::string& text, unsigned long p);

/// Equality in the tree: type II disks compare as sets.
bool same_point(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y);

/// x <= y in the order where larger disks are higher.
bool below(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y);

/// Smallest disk containing both; arguments must be finite.
BerkPoint join(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y);

/// Path metric on H_Ber, in base-p logarithms.
Rational hyp_dist(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y);

/// The tree median; infinity is allowed and median(u, v, inf) = join(u, v).
BerkPoint median(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y, const BerkPoint& z);

/// x lies on the arc [a, b].
bool on_segment(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& a, const BerkPoint& b);

/// Point of [x, y] at distance t from the type II point x.
BerkPoint point_along(const PadicContext& ctx, const BerkPoint& x, const BerkPoint& y, const Rational& t);

/// Action of a Moebius map on the Berkovich line.
BerkPoint act(const PadicContext& ctx, const MobiusMap& g, const BerkPoint& x);

bool fixes_gauss(const PadicContext& ctx, const MobiusMap& g);

/// h = (z - a) / rho with |rho| = p^s, so that act(h, D(a, p^s)) is the Gauss point.
MobiusMap conjugator_to_gauss(const PadicContext& ctx, const BerkPoint& x);

}  // namespace padic
