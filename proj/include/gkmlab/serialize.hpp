#pragma once

#include <json.hpp>

#include "gkmlab/cohomology.hpp"

namespace gkm {

using json = nlohmann::ordered_json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const Vec& v);
Vec vec_from_json(const json& j, int expected_dim, const std::string& where);

/// [{"exponents": [...], "coeff": "p/q"}, ...]
json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const json& j, int nvars, const std::string& where);

json class_to_json(const Skeleton& s, const std::vector<MultiPoly>& values, int degree);
/// Returns the values in vertex order; vertices missing from "values" get 0.
std::vector<MultiPoly> class_from_json(const Skeleton& s, const json& j, int* degree_out = nullptr);

json skeleton_to_json(const Skeleton& s);
/// Throws InputError naming the offending field.
Skeleton skeleton_from_json(const json& j);

}  // namespace gkm
