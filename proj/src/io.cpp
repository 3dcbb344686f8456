#include "padic/io.hpp"

#include "padic/errors.hpp"

namespace padic {

namespace {

std::string field_string(const json& j, const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
    const json& v = j.at(key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ParseError(std::string("key \"") + key + "\" must be a string or integer");
}

}  // namespace

json map_to_json(const MobiusMap& g) {
    return json{{"a", g.a().str()}, {"b", g.b().str()}, {"c", g.c().str()}, {"d", g.d().str()}};
}

MobiusMap map_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("map JSON must be an object");
    return MobiusMap(parse_field(field_string(j, "a")), parse_field(field_string(j, "b")),
                     parse_field(field_string(j, "c")), parse_field(field_string(j, "d")));
}

std::vector<MobiusMap> maps_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("generator file must hold a JSON array of maps");
    std::vector<MobiusMap> out;
    for (const auto& e : j) out.push_back(map_from_json(e));
    return out;
}

json point_to_json(const ProjPoint& z) { return z.str(); }

ProjPoint point_from_json(const json& j) {
    if (!j.is_string()) throw ParseError("point JSON must be a string");
    return parse_point(j.get<std::string>());
}

json berk_to_json(const BerkPoint& x) { return x.str(); }

BerkPoint berk_from_json(const json& j, unsigned long p) {
    if (!j.is_string()) throw ParseError("Berkovich point JSON must be a string");
    return parse_berk(j.get<std::string>(), p);
}

json magnitude_to_json(const Magnitude& m) { return m.str(); }

json locus_to_json(const FixedLocus& F) {
    json j{{"kind", to_string(F.kind)}};
    using K = FixedLocus::Kind;
    if (F.kind == K::TWO_POINTS || F.kind == K::AXIS || F.kind == K::TUBE) {
        j["endpoints"] = json::array({F.geodesic.alpha.str(), F.geodesic.beta.str()});
    }
    if (F.kind == K::TUBE) j["radius"] = to_string(F.radius);
    if (F.kind == K::HOROBALL) {
        j["fixed_point"] = F.fixed_point.str();
        j["boundary"] = F.boundary.str();
    }
    return j;
}

CFSpec cfspec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b")) throw ParseError("continued fraction JSON needs a and b");
    CFSpec s;
    for (const auto& e : j.at("a")) s.a.push_back(parse_field(e.is_string() ? e.get<std::string>() : e.dump()));
    for (const auto& e : j.at("b")) s.b.push_back(parse_field(e.is_string() ? e.get<std::string>() : e.dump()));
    if (s.a.size() != s.b.size()) throw ParseError("continued fraction needs equally many a and b");
    return s;
}

}  // namespace padic
