#pragma once

#include "ugggr/gggr.hpp"

#include <json.hpp>

namespace ugggr {

using json = nlohmann::ordered_json;

json to_json(const Partition& p);
json to_json(const QPoly& p);
json to_json(const LusztigDatum& d);
json to_json(const FamilyShape& s);
json to_json(const BranchTerm& t);
json to_json(const DecompositionTable& t);
json to_json(const ConsistencyReport& r);

Partition partition_from_json(const json& j);
QPoly qpoly_from_json(const json& j);
// Validates the result.
LusztigDatum datum_from_json(const json& j);
FamilyShape shape_from_json(const json& j);
BranchTerm branch_term_from_json(const json& j);
DecompositionTable table_from_json(const json& j);

}  // namespace ugggr
