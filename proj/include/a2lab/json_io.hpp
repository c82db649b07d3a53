#pragma once

#include <json.hpp>

#include "a2lab/weight.hpp"

namespace a2lab {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json quad_json(const QuadScalar& v);
QuadScalar quad_from_json(const Json& j);

Json pcf_json(const PiecewiseFn& f);
PiecewiseFn pcf_from_json(const Json& j);

Json params_json(const WeightParams& p);
WeightParams params_from_json(const Json& j);

/// Versioned full serialization of a built weight; parse-serialize is the
/// identity on bytes (canonical rational strings, ordered keys).
Json weight_json(const ConstructedWeight& cw);
ConstructedWeight weight_from_json(const Json& j);

std::string dump(const Json& j);

}  // namespace a2lab
