#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "padic/geometry.hpp"

namespace padic {

struct GroupSpec {
    std::vector<MobiusMap> generators;
    int max_word_length = 1;
    /// Upper bound on the number of distinct elements enumerated.
    std::size_t budget = 200000;
};

/// A group element with the reduced word that first produced it. Letters are
/// 'a', 'b', ... for generators and 'A', 'B', ... for their inverses; "e" is the identity.
struct Word {
    std::string word;
    MobiusMap map;
};

/// Distinct elements of word length <= L in breadth-first, then letter order.
std::vector<Word> enumerate_ball(const GroupSpec& spec);

/// Dedup key: canonical projective form.
std::string projective_key(const MobiusMap& g);

enum class Verdict { DISCRETE_CERTIFIED, NOT_CERTIFIED };
std::string to_string(Verdict v);

struct DiscretenessReport {
    Verdict verdict = Verdict::NOT_CERTIFIED;
    /// Minimum |g - I| over nonidentity words; nullopt when some lift needs a missing square root.
    std::optional<Magnitude> min_distance_to_identity;
    std::map<ElementClass, int> class_census;
    std::vector<std::string> unitary_words;
    std::size_t elements = 0;
    /// Certification only covers the enumerated ball.
    bool finite_ball_caveat = true;
};

DiscretenessReport discreteness_report(const PadicContext& ctx, const GroupSpec& spec);

/// A point of H_Ber fixed by every element, found by combining pairwise
/// intersections with tree medians. Throws NotAllElliptic when an element or
/// pairwise product is neither elliptic nor the identity.
std::optional<BerkPoint> common_fixed_point(const PadicContext& ctx, const std::vector<MobiusMap>& elements);

struct OrbitSample {
    std::vector<ProjPoint> points;
    Magnitude min_distance;
    Magnitude min_distance_half_depth;
    /// Heuristic: the closest pair gets closer as the depth doubles.
    bool accumulation = false;
};

OrbitSample orbit_sample(const PadicContext& ctx, const GroupSpec& spec, const ProjPoint& seed);

}  // namespace padic
