#pragma once

#include <optional>
#include <string>

#include "padic/berkovich.hpp"

namespace padic {

/// Geodesic line of the Berkovich tree between two distinct points of P^1.
struct Geodesic {
    ProjPoint alpha;
    ProjPoint beta;
};

/// Same endpoint set.
bool same_geodesic(const Geodesic& A, const Geodesic& B);
std::string to_string(const Geodesic& A);

/// Nearest point of A to x: median(alpha, beta, x).
BerkPoint project(const PadicContext& ctx, const Geodesic& A, const BerkPoint& x);
/// Distance from a type II point to A.
Rational dist_to_geodesic(const PadicContext& ctx, const Geodesic& A, const BerkPoint& x);
bool on_geodesic(const PadicContext& ctx, const Geodesic& A, const BerkPoint& x);

/// Arcs [a, b] and [c, d] share a point (type I endpoints included).
bool arcs_meet(const PadicContext& ctx, const BerkPoint& a, const BerkPoint& b, const BerkPoint& c,
               const BerkPoint& d);
bool geodesics_meet(const PadicContext& ctx, const Geodesic& A, const Geodesic& B);

/// A map C with C(0) = alpha and C(inf) = beta.
MobiusMap frame_map(const ProjPoint& alpha, const ProjPoint& beta);

Geodesic axis(const PadicContext& ctx, const MobiusMap& g);

/// The trace-zero involution fixing alpha and beta.
MobiusMap involution_with_fixed_points(const ProjPoint& alpha, const ProjPoint& beta);

bool is_involution(const MobiusMap& f);

struct InvolutionPair {
    MobiusMap f;
    MobiusMap h;
};

/// g = f o h with f, h involutions. In normal form g = k z the pair is
/// f = -k b^2 / z, h = -b^2 / z; for parabolic g it is f = -z, h = -z - 1.
InvolutionPair factor_involutions(const PadicContext& ctx, const MobiusMap& g,
                                  const FieldElem& b_squared = FieldElem(1));

/// The involution fixing B's endpoints swaps A's endpoints.
bool is_orthogonal(const PadicContext& ctx, const Geodesic& A, const Geodesic& B);

/// Common perpendicular; uses the normalization matching the residue characteristic.
Geodesic common_perpendicular(const PadicContext& ctx, const Geodesic& A, const Geodesic& B);
/// A sent to (0, inf) and B to (a, b): endpoints +-sqrt(ab).
Geodesic common_perpendicular_root(const PadicContext& ctx, const Geodesic& A, const Geodesic& B);
/// A sent to (-1, 1): solve f(-1) = -1, f(1) = 1, f(s) + f(t) = 0.
Geodesic common_perpendicular_balanced(const PadicContext& ctx, const Geodesic& A, const Geodesic& B);

/// Fixed set of a map in P^1 and H_Ber.
struct FixedLocus {
    enum class Kind { TWO_POINTS, AXIS, TUBE, HOROBALL, ALL };
    Kind kind = Kind::ALL;
    Geodesic geodesic;
    /// Tube radius; zero for an axis.
    Rational radius = 0;
    /// HOROBALL: the fixed point and a boundary point of the horoball.
    ProjPoint fixed_point;
    BerkPoint boundary;
};

std::string to_string(FixedLocus::Kind k);
std::string to_string(const FixedLocus& F);

FixedLocus fixed_locus(const PadicContext& ctx, const MobiusMap& g);

/// Membership in the descriptor.
bool locus_contains(const PadicContext& ctx, const FixedLocus& F, const BerkPoint& x);

/// The act-based oracle act(g, x) = x.
bool locus_membership(const PadicContext& ctx, const MobiusMap& g, const BerkPoint& x);

/// A canonical point of an AXIS, TUBE or ALL locus.
BerkPoint locus_point(const PadicContext& ctx, const FixedLocus& F);

/// A common point of two elliptic (AXIS/TUBE) or ALL loci.
std::optional<BerkPoint> locus_intersect(const PadicContext& ctx, const FixedLocus& F1, const FixedLocus& F2);

/// p = 2: an involution's axis together with a fixed point at distance 1.
struct TailedAxis {
    Geodesic geodesic;
    BerkPoint tail;
};

/// Canonical tail: the disk D((alpha+beta)/2, 2|alpha-beta|), or D(alpha+1, 1/2) when beta = inf.
TailedAxis tailed_axis(const PadicContext& ctx, const MobiusMap& f);
/// Tail taken as the projection of the axis onto a reference geodesic.
TailedAxis tailed_axis(const PadicContext& ctx, const MobiusMap& f, const Geodesic& reference);

bool tailed_axes_meet(const PadicContext& ctx, const TailedAxis& A, const TailedAxis& B);

/// Unitary u with u(0) = alpha and u(inf) = beta, iff chordal(alpha, beta) = 1.
std::optional<MobiusMap> antipodal_witness(const PadicContext& ctx, const ProjPoint& alpha, const ProjPoint& beta);

struct Decomposition {
    MobiusMap u;
    MobiusMap f;
};

/// g = u o f with u unitary and f the identity or loxodromic with antipodal fixed points.
Decomposition decompose_unitary_loxodromic(const PadicContext& ctx, const MobiusMap& g);

}  // namespace padic
