#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "padic/projective.hpp"

namespace padic {

using Mat2 = Eigen::Matrix<FieldElem, 2, 2>;

/// Invertible 2x2 matrix over the working field, identified up to scalars.
class MobiusMap {
public:
    MobiusMap();
    MobiusMap(const FieldElem& a, const FieldElem& b, const FieldElem& c, const FieldElem& d);
    explicit MobiusMap(const Mat2& m);

    static MobiusMap identity() { return MobiusMap(); }

    const Mat2& matrix() const { return m_; }
    const FieldElem& a() const { return m_(0, 0); }
    const FieldElem& b() const { return m_(0, 1); }
    const FieldElem& c() const { return m_(1, 0); }
    const FieldElem& d() const { return m_(1, 1); }
    const FieldElem& det() const { return det_; }
    FieldElem trace() const { return a() + d(); }

    /// Composition (*this) o h.
    MobiusMap operator*(const MobiusMap& h) const;
    /// Adjugate inverse.
    MobiusMap inverse() const;
    ProjPoint operator()(const ProjPoint& z) const;

    MobiusMap scaled(const FieldElem& t) const;
    /// Scaled so the first nonzero entry in row-major order is 1.
    MobiusMap canonical() const;
    bool is_identity() const;

    /// Projective equality.
    friend bool operator==(const MobiusMap& g, const MobiusMap& h);
    friend bool operator!=(const MobiusMap& g, const MobiusMap& h) { return !(g == h); }

    /// "a,b;c,d".
    std::string str() const;

private:
    Mat2 m_;
    FieldElem det_;
};

inline MobiusMap compose(const MobiusMap& g, const MobiusMap& h) { return g * h; }
inline MobiusMap inverse(const MobiusMap& g) { return g.inverse(); }
inline ProjPoint apply(const MobiusMap& g, const ProjPoint& z) { return g(z); }

/// Parses "a,b;c,d" with field-element entries.
MobiusMap parse_map(const std::string& text);

enum class ElementClass { IDENTITY, PARABOLIC, TAME_ELLIPTIC, WILD_ELLIPTIC, LOXODROMIC };

std::string to_string(ElementClass c);
bool is_elliptic(ElementClass c);

/// tr^2 / det, the scale-invariant trace.
FieldElem sigma(const MobiusMap& g);

ElementClass classify(const PadicContext& ctx, const MobiusMap& g);

/// max |entries|.
Magnitude max_entry(const PadicContext& ctx, const MobiusMap& g);

/// Norm of the determinant-one lift: max |entries| / |det|^(1/2).
Magnitude norm(const PadicContext& ctx, const MobiusMap& g);

bool is_unitary(const PadicContext& ctx, const MobiusMap& g);
inline bool has_good_reduction(const PadicContext& ctx, const MobiusMap& g) { return is_unitary(ctx, g); }

/// Best chordal Lipschitz constant, norm(g)^2.
Magnitude lipschitz(const PadicContext& ctx, const MobiusMap& g);

/// Pair (z, w) with chordal(gz, gw) = lipschitz(g) * chordal(z, w).
std::pair<ProjPoint, ProjPoint> lipschitz_witness(const PadicContext& ctx, const MobiusMap& g);

/// Hyperbolic displacement of the Gauss point, 2 log_p norm(g).
Rational displacement_gauss(const PadicContext& ctx, const MobiusMap& g);

/// |g - g^-1| on the determinant-one lift.
Magnitude m_norm(const PadicContext& ctx, const MobiusMap& g);
/// m_norm(g) / norm(g).
Magnitude M_norm(const PadicContext& ctx, const MobiusMap& g);

/// Fixed points in P^1: empty with all = true for the identity, one point for
/// parabolic maps, two otherwise.
struct FixedPoints {
    bool all = false;
    std::vector<ProjPoint> points;
};

/// Throws UnsupportedExtension when the discriminant has no root in the field.
FixedPoints fixed_points(const PadicContext& ctx, const MobiusMap& g);

/// Uniform distance to the identity. For p >= 3 the value is exact and equals
/// M(g); for p = 2 only lower <= rho0 <= upper is known and value is the best
/// displacement found.
struct Rho0 {
    Magnitude value;
    Magnitude lower;
    Magnitude upper;
    bool exact = true;
    ProjPoint witness;
};

Rho0 rho0_identity(const PadicContext& ctx, const MobiusMap& g);

/// Uniform distance between two maps via right invariance.
Rho0 rho0(const PadicContext& ctx, const MobiusMap& g, const MobiusMap& h);

/// |g - I| on a determinant-one lift, minimized over both signs of the lift.
Magnitude norm_minus_identity(const PadicContext& ctx, const MobiusMap& g);

/// Max displacement over the cube roots of unity; needs omega in the field.
Magnitude epsilon(const PadicContext& ctx, const MobiusMap& g);
/// Max displacement over {0, 1, inf}.
Magnitude epsilon1(const PadicContext& ctx, const MobiusMap& g);
/// Max displacement over {0, inf}.
Magnitude epsilon2(const PadicContext& ctx, const MobiusMap& g);

/// The primitive cube root of unity (-1 + sqrt(-3)) / 2.
FieldElem omega(const PadicContext& ctx);

/// Distance from g to the unitary group: 0 or 1.
Magnitude d_to_unitary(const PadicContext& ctx, const MobiusMap& g);

/// A point z with chordal(gz, uz) = 1 for a non-unitary g and unitary u.
std::optional<ProjPoint> d_to_unitary_witness(const PadicContext& ctx, const MobiusMap& g, const MobiusMap& u);

/// The unique map sending z_j to w_j.
MobiusMap mobius_through_three_points(const ProjPoint& z1, const ProjPoint& z2, const ProjPoint& z3,
                                      const ProjPoint& w1, const ProjPoint& w2, const ProjPoint& w3);

}  // namespace padic
