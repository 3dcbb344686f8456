#pragma once

#include <Eigen/Core>
#include <string>

#include "padic/magnitude.hpp"
#include "padic/valuation.hpp"

namespace padic {

using Vec2 = Eigen::Matrix<FieldElem, 2, 1>;

/// Point of P^1 in canonical form: finite points carry x (y = 1), infinity has y = 0.
class ProjPoint {
public:
    ProjPoint() = default;
    ProjPoint(const FieldElem& x) : x_(x) {}
    ProjPoint(int x) : x_(x) {}
    ProjPoint(const Rational& x) : x_(x) {}

    static ProjPoint infinity();
    /// Canonicalizes a homogeneous pair (x, y) != (0, 0).
    static ProjPoint from_homogeneous(const FieldElem& x, const FieldElem& y);

    bool is_inf() const { return inf_; }
    /// The affine coordinate; only valid for finite points.
    const FieldElem& x() const;

    Vec2 homogeneous() const;

    friend bool operator==(const ProjPoint& z, const ProjPoint& w) {
        return z.inf_ == w.inf_ && (z.inf_ || z.x_ == w.x_);
    }
    friend bool operator!=(const ProjPoint& z, const ProjPoint& w) { return !(z == w); }

    /// Field-element string or "inf".
    std::string str() const;

private:
    FieldElem x_;
    bool inf_ = false;
};

/// Parses a field element or "inf".
ProjPoint parse_point(const std::string& text);

/// Max of the absolute values of a homogeneous pair.
Magnitude vec_norm(const PadicContext& ctx, const Vec2& v);

/// Chordal metric rho_v(z, w).
Magnitude chordal(const PadicContext& ctx, const ProjPoint& z, const ProjPoint& w);

/// rho(x,y) rho(z,w) / (rho(x,z) rho(y,w)).
Magnitude cross_ratio_chordal(const PadicContext& ctx, const ProjPoint& x, const ProjPoint& y,
                              const ProjPoint& z, const ProjPoint& w);

}  // namespace padic
