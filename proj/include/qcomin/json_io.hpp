#pragma once

#include <json.hpp>

#include "qcomin/comin.hpp"
#include "qcomin/qdegrees.hpp"
#include "qcomin/qposet.hpp"
#include "qcomin/tableaux.hpp"

namespace qcomin {

using Json = nlohmann::json;

Json to_json(const CominData& c, const Shape& s);
Shape shape_from_json(const CominData& c, const Json& j);

Json to_json(const DegreeProfile& p);
DegreeProfile profile_from_json(const Json& j);

Json to_json(const WeightMultiset& w);
WeightMultiset multiset_from_json(const Json& j);

Json poset_json(const CominData& c);
Json cylinder_json(const CominData& c, const CylinderWindow& w);

}  // namespace qcomin
