#pragma once

// JSON forms of points, test objects, distances and polylines.

#include <json.hpp>

#include "stabgeo/coords.hpp"
#include "stabgeo/halfplane.hpp"
#include "stabgeo/metric.hpp"
#include "stabgeo/paths.hpp"
#include "stabgeo/sheaf.hpp"

namespace stabgeo {

using Json = nlohmann::ordered_json;

Json to_json(const StabPoint& s);
/// Same as the StabPoint form without "x" and "y".
Json to_json(const QuotientPoint& q);
Json to_json(const HPoint& p);
Json to_json(const SheafClass& c);
Json to_json(const DistanceBreakdown& d);
Json to_json(const AnyPoint& p);
/// Array of point objects.
Json to_json(const Polyline& path);

/// Missing "x"/"y" default to 0. Throws DomainError on malformed input.
StabPoint stab_point_from_json(const Json& j);
QuotientPoint quotient_point_from_json(const Json& j);
/// [re, im] or a bare real.
HPoint hpoint_from_json(const Json& j);
SheafClass sheaf_class_from_json(const Json& j);

}  // namespace stabgeo
