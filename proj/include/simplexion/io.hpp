#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "simplexion/complex.hpp"
#include "simplexion/graph.hpp"
#include "simplexion/matrix.hpp"

namespace simplexion {

using Json = nlohmann::ordered_json;

// {"facets": [[...], ...], "name": ...}; facets sorted lexicographically.
Json complex_to_json(const Complex& g, const std::string& name = "");
Complex complex_from_json(const Json& j);

// {"n": int, "edges": [[u, v], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"values": {"id": number}}
std::map<int, double> function_from_json(const Json& j);
Json function_to_json(const std::map<int, double>& f);

// {"rows": n, "cols": m, "entries": [["decimal", ...], ...]}
Json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace simplexion
