#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "padic/cfrac.hpp"
#include "padic/geometry.hpp"

namespace padic {

using json = nlohmann::ordered_json;

/// {"a": "...", "b": "...", "c": "...", "d": "..."} with field-element strings.
json map_to_json(const MobiusMap& g);
MobiusMap map_from_json(const json& j);

/// JSON array of map objects.
std::vector<MobiusMap> maps_from_json(const json& j);

json point_to_json(const ProjPoint& z);
ProjPoint point_from_json(const json& j);

json berk_to_json(const BerkPoint& x);
BerkPoint berk_from_json(const json& j, unsigned long p);

json magnitude_to_json(const Magnitude& m);

json locus_to_json(const FixedLocus& F);

/// {"a": [...], "b": [...]} of field-element strings.
CFSpec cfspec_from_json(const json& j);

}  // namespace padic
