#include "simplexion/io.hpp"

#include <fstream>
#include <sstream>

#include "simplexion/errors.hpp"

namespace simplexion {

Json complex_to_json(const Complex& g, const std::string& name) {
    Json j;
    if (!name.empty()) j["name"] = name;
    Json facets = Json::array();
    for (const Simplex& f : g.facets()) facets.push_back(f.vertices());
    j["facets"] = std::move(facets);
    return j;
}

Complex complex_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw InvalidInput("complex JSON needs a \"facets\" array");
    std::vector<std::vector<int>> sets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw InvalidInput("facet must be an array of vertex ids");
        std::vector<int> s;
        for (const auto& v : f) {
            if (!v.is_number_integer()) throw InvalidInput("vertex id must be an integer");
            s.push_back(v.get<int>());
        }
        sets.push_back(std::move(s));
    }
    return Complex::close(sets);
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.n;
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw InvalidInput("graph JSON needs \"n\" and \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw InvalidInput("edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edges(j["n"].get<int>(), edges);
}

std::map<int, double> function_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("values") || !j["values"].is_object())
        throw InvalidInput("function JSON needs a \"values\" object");
    std::map<int, double> f;
    for (const auto& [k, v] : j["values"].items()) {
        std::size_t pos = 0;
        int id = 0;
        try {
            id = std::stoi(k, &pos);
        } catch (const std::exception&) {
            throw InvalidInput("function key is not an integer id: " + k);
        }
        if (pos != k.size()) throw InvalidInput("function key is not an integer id: " + k);
        if (!v.is_number()) throw InvalidInput("function value must be numeric");
        f[id] = v.get<double>();
    }
    return f;
}

Json function_to_json(const std::map<int, double>& f) {
    Json vals = Json::object();
    for (const auto& [k, v] : f) vals[std::to_string(k)] = v;
    return Json{{"values", vals}};
}

Json matrix_to_json(const ExactMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
        rows.push_back(std::move(r));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

ExactMatrix matrix_from_json(const Json& j) {
    const int r = j.at("rows").get<int>(), c = j.at("cols").get<int>();
    ExactMatrix m(r, c);
    const Json& e = j.at("entries");
    if (static_cast<int>(e.size()) != r) throw InvalidInput("matrix JSON: row count mismatch");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(e[i].size()) != c) throw InvalidInput("matrix JSON: column count mismatch");
        for (int k = 0; k < c; ++k) m(i, k) = e[i][k].is_string() ? BigInt(e[i][k].get<std::string>()) : BigInt(e[i][k].get<long long>());
    }
    return m;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InvalidInput("malformed JSON in " + path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write " + path);
    out << text;
}

}  // namespace simplexion
