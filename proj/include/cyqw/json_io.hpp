#pragma once

#include <string>

#include "json.hpp"
#include "cyqw/pathalg.hpp"
#include "cyqw/qp.hpp"

namespace cyqw {

using Json = nlohmann::ordered_json;

// Parse errors carry line and column.
Json parse_json_text(const std::string& text, const std::string& origin = "<input>");
Json read_json_file(const std::string& path);

Quiver quiver_from_json(const Json& doc);
Json quiver_to_json(const Quiver& q);
PathElement element_from_json(const Quiver& q, const Json& terms, const std::string& where);
Json element_to_json(const Quiver& q, const PathElement& x);
Json path_to_json(const Quiver& q, const Path& p);
PresentedGradedAlgebra algebra_from_json(const Json& doc);
Json algebra_to_json(const PresentedGradedAlgebra& alg);

QuiverWithPotential qp_from_json(const Json& doc);
Json qp_to_json(const QuiverWithPotential& qp);
std::set<int> arrow_set_from_names(const Quiver& q, const std::vector<std::string>& names);
std::set<int> vertex_set_from_ids(const Quiver& q, const std::vector<std::string>& ids);

// Throws InputError naming the field.
const Json& require(const Json& obj, const char* key, const std::string& where);
std::string as_string(const Json& v, const std::string& where);
int as_int(const Json& v, const std::string& where);
Rational as_rational(const Json& v, const std::string& where);

}  // namespace cyqw
