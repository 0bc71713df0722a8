#pragma once

#include <json.hpp>
#include <string>

#include "cgseries/group_model.hpp"

namespace cgs {

using Json = nlohmann::ordered_json;

// [[k, num, den], ...] meaning sum (num/den) zeta_m^k.
Json cyclo_to_json(const Cyclo& c, long m);
Cyclo cyclo_from_json(const Json& j, long m);
Json rational_to_json(const Rational& r);

Json group_to_json(const GroupModel& g);
// Throws SchemaError on malformed input and the ValidationError subtypes
// from require_valid on inconsistent data.
GroupModel group_from_json(const Json& j);
GroupModel load_group(const std::string& path);
void save_group(const GroupModel& g, const std::string& path);

}  // namespace cgs
