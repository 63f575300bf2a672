#pragma once

#include "edisc/discriminant.hpp"
#include "edisc/secondary.hpp"
#include "edisc/tropical.hpp"

#include <json.hpp>

#include <stdexcept>

namespace edisc {

using Json = nlohmann::ordered_json;

/// Malformed or missing input fields.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const QVec& v);
/// Integer coordinates as JSON integers.
Json lattice_json(const QVec& v);
Json to_json(const PointConfiguration& c);
Json to_json(const Tuple& a);
Json to_json(const Polytope& p);
Json to_json(const Facing& g);
Json to_json(const Cone& c);
Json to_json(const WeightedFan& f);
Json to_json(const PurityReport& r);
Json to_json(const Triangulation& t);

/// Accepts a JSON integer or a "p/q" string.
Rational rational_from_json(const Json& j);
QVec vector_from_json(const Json& j, int dim);
std::vector<QVec> points_from_json(const Json& j, int dim);
/// {"dim": n, "points": [[...], ...]}
PointConfiguration config_from_json(const Json& j);
/// {"n": n, "members": [PointConfiguration, ...]}; a member may also be a bare list of points.
Tuple tuple_from_json(const Json& j);
Tuple members_from_json(const Json& members, int dim);
/// {"support": [...], "parts": [[[...]]], "witness": [...]}; the witness is optional.
Facing facing_from_json(const Json& j, int dim);

int int_field(const Json& j, const char* key);
const Json& field(const Json& j, const char* key);

}  // namespace edisc
