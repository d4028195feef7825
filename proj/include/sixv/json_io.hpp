#pragma once

#include "sixv/groupoid.hpp"
#include "sixv/six_vertex.hpp"
#include "sixv/ybe.hpp"

#include <json.hpp>

#include <array>
#include <string>

namespace sixv {

using Json = nlohmann::json;

// Scalars: exact as {"re":"p/q","im":"p/q"}, floating as {"re":1.25,"im":0.0}.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Mode mode);

// Matrices: {"a1":..., "a2":..., "b1":..., "b2":..., "c1":..., "c2":...,
// "mode":"exact"|"float"}.
Json matrix_to_json(const SixVertexMatrix& m);
SixVertexMatrix matrix_from_json(const Json& j);

Json triple_to_json(const YbTriple& t);
YbTriple triple_from_json(const Json& j);

Json delta_to_json(const DeltaPair& d);
Json flags_to_json(const ClassFlags& f);
Json conditions_to_json(const SolveConditions& c);
Json residuals_to_json(const std::array<Scalar, 13>& r);

Json element_to_json(const GroupoidElement& e);
Json report_to_json(const FuzzReport& r);

// Family request {"kind":"cf"|"ff", "q1":..., "q2":..., "beta":..., "z1":...,
// "z2":..., "w":..., "mode"?}. Scalar fields may be grammar strings or
// {"re","im"} objects.
SixVertexMatrix family_from_json(const Json& j);

// Wraps nlohmann parsing so malformed input surfaces as ParseError with the
// offending location.
Json parse_json_text(const std::string& text);

} // namespace sixv
