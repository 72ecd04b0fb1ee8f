#pragma once

#include "cubature/formula.hpp"

#include <json.hpp>

#include <string>

namespace cub {

// Formula <-> JSON. Exact scalars serialize as "p/q" or "p/q+r/s*sqrt(d)";
// bigfloats as decimal strings with enough digits for their precision.
nlohmann::json formula_to_json(const Formula& f);
Formula formula_from_json(const nlohmann::json& j);

nlohmann::json space_to_json(const SpaceDescriptor& s);
SpaceDescriptor space_from_json(const nlohmann::json& j);

std::string dump_formula(const Formula& f);
Formula parse_formula(const std::string& text);

Formula load_formula(const std::string& path);
void save_formula(const Formula& f, const std::string& path);

// Scalar-mode tag: "rational", "quadratic:d" or "float".
std::string scalar_tag(const Formula& f);

}  // namespace cub
