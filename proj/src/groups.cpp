#include "padic/groups.hpp"

#include <functional>
#include <set>
#include <unordered_set>

#include "padic/errors.hpp"

namespace padic {

std::string projective_key(const MobiusMap& g) { return g.canonical().str(); }

std::vector<Word> enumerate_ball(const GroupSpec& spec) {
    std::size_t n = spec.generators.size();
    if (spec.max_word_length < 0) throw Error("negative word length");
    // Letter 2i is generator i, 2i+1 its inverse.
    std::vector<MobiusMap> letters;
    std::vector<char> names;
    for (std::size_t i = 0; i < n; ++i) {
        letters.push_back(spec.generators[i]);
        letters.push_back(spec.generators[i].inverse());
        names.push_back(static_cast<char>('a' + i));
        names.push_back(static_cast<char>('A' + i));
    }
    std::vector<Word> out{{"e", MobiusMap()}};
    std::unordered_set<std::string> seen{projective_key(MobiusMap())};
    struct Frontier {
        std::string word;
        MobiusMap map;
        int last;
    };
    std::vector<Frontier> frontier{{"", MobiusMap(), -1}};
    for (int len = 1; len <= spec.max_word_length; ++len) {
        std::vector<Frontier> next;
        for (const auto& w : frontier) {
            for (std::size_t l = 0; l < letters.size(); ++l) {
                if (w.last >= 0 && (static_cast<std::size_t>(w.last) ^ 1U) == l) continue;
                MobiusMap m = w.map * letters[l];
                std::string word = w.word + names[l];
                next.push_back({word, m, static_cast<int>(l)});
                if (seen.insert(projective_key(m)).second) {
                    out.push_back({word, m});
                    if (out.size() > spec.budget) {
                        throw BudgetExceeded("enumerate_ball exceeded " + std::to_string(spec.budget) + " elements");
                    }
                }
            }
        }
        if (next.size() > 4 * spec.budget) throw BudgetExceeded("word frontier exceeded the budget");
        frontier = std::move(next);
    }
    return out;
}

std::string to_string(Verdict v) { return v == Verdict::DISCRETE_CERTIFIED ? "DISCRETE_CERTIFIED" : "NOT_CERTIFIED"; }

DiscretenessReport discreteness_report(const PadicContext& ctx, const GroupSpec& spec) {
    DiscretenessReport rep;
    std::vector<Word> ball = enumerate_ball(spec);
    rep.elements = ball.size();
    bool all_lox = true;
    bool distance_known = true;
    for (const auto& w : ball) {
        ElementClass c = classify(ctx, w.map);
        rep.class_census[c]++;
        if (c == ElementClass::IDENTITY) continue;
        if (c != ElementClass::LOXODROMIC) all_lox = false;
        if (is_unitary(ctx, w.map)) rep.unitary_words.push_back(w.word);
        if (!distance_known) continue;
        try {
            Magnitude d = norm_minus_identity(ctx, w.map);
            if (!rep.min_distance_to_identity || d < *rep.min_distance_to_identity) rep.min_distance_to_identity = d;
        } catch (const UnsupportedExtension&) {
            distance_known = false;
            rep.min_distance_to_identity.reset();
        }
    }
    if (rep.unitary_words.empty() && all_lox) rep.verdict = Verdict::DISCRETE_CERTIFIED;
    return rep;
}

std::optional<BerkPoint> common_fixed_point(const PadicContext& ctx, const std::vector<MobiusMap>& elements) {
    std::size_t n = elements.size();
    if (n == 0) return BerkPoint::gauss();
    auto ok = [&](const MobiusMap& g) {
        ElementClass c = classify(ctx, g);
        return c == ElementClass::IDENTITY || is_elliptic(c);
    };
    auto name = [](std::size_t i) { return "g" + std::to_string(i); };
    for (std::size_t i = 0; i < n; ++i) {
        if (!ok(elements[i])) throw NotAllElliptic("element is not elliptic", name(i));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && !ok(elements[i] * elements[j])) {
                throw NotAllElliptic("pairwise product is not elliptic", name(i) + "*" + name(j));
            }
        }
    }
    std::vector<FixedLocus> loci;
    for (const auto& g : elements) loci.push_back(fixed_locus(ctx, g));

    // P(S) = median(P(S - a), P(S - b), P({a, b})): each element of S fixes two
    // of the three and hence the arc between them, which contains the median.
    std::map<unsigned long long, std::optional<BerkPoint>> memo;
    std::function<std::optional<BerkPoint>(unsigned long long)> solve = [&](unsigned long long mask) {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1ULL) idx.push_back(i);
        }
        std::optional<BerkPoint> r;
        if (idx.size() == 1) {
            r = locus_point(ctx, loci[idx[0]]);
        } else if (idx.size() == 2) {
            r = locus_intersect(ctx, loci[idx[0]], loci[idx[1]]);
        } else {
            unsigned long long a = 1ULL << idx[0], b = 1ULL << idx[1];
            auto x = solve(mask & ~a), y = solve(mask & ~b), z = solve(a | b);
            if (x && y && z) r = median(ctx, *x, *y, *z);
        }
        memo[mask] = r;
        return r;
    };
    if (n > 20) throw BudgetExceeded("common_fixed_point supports at most 20 elements");
    auto point = solve((1ULL << n) - 1);
    if (!point) return std::nullopt;
    for (const auto& g : elements) {
        if (!locus_membership(ctx, g, *point)) return std::nullopt;
    }
    return point;
}

OrbitSample orbit_sample(const PadicContext& ctx, const GroupSpec& spec, const ProjPoint& seed) {
    auto orbit = [&](int depth) {
        GroupSpec s = spec;
        s.max_word_length = depth;
        std::vector<ProjPoint> pts;
        std::set<std::string> seen;
        for (const auto& w : enumerate_ball(s)) {
            ProjPoint z = w.map(seed);
            if (seen.insert(z.str()).second) pts.push_back(z);
        }
        return pts;
    };
    auto min_dist = [&](const std::vector<ProjPoint>& pts) {
        std::optional<Magnitude> best;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                Magnitude d = chordal(ctx, pts[i], pts[j]);
                if (!best || d < *best) best = d;
            }
        }
        return best ? *best : Magnitude::one(ctx.p());
    };
    OrbitSample out;
    out.points = orbit(spec.max_word_length);
    out.min_distance = min_dist(out.points);
    out.min_distance_half_depth = min_dist(orbit(spec.max_word_length / 2));
    out.accumulation = out.min_distance < out.min_distance_half_depth;
    return out;
}

}  // namespace padic
