#include "flatsurf/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace flatsurf {

using nlohmann::json;

std::string surface_to_json(const TranslationSurface& s) {
    json j;
    j["name"] = s.name;
    j["polygons"] = json::array();
    for (const auto& poly : s.polygons) {
        json verts = json::array();
        for (const auto& v : poly.vertices) verts.push_back({v.x, v.y});
        j["polygons"].push_back({{"vertices", verts}});
    }
    j["gluings"] = json::array();
    for (const auto& [a, b] : s.gluings)
        j["gluings"].push_back({{a.polygon, a.edge}, {b.polygon, b.edge}});
    return j.dump(2) + "\n";
}

TranslationSurface surface_from_json(const std::string& text) {
    json j = json::parse(text);
    TranslationSurface s;
    s.name = j.value("name", "");
    if (!j.contains("polygons") || !j["polygons"].is_array())
        throw std::invalid_argument("surface JSON needs a polygons array");
    for (const auto& jp : j["polygons"]) {
        Polygon poly;
        for (const auto& jv : jp.at("vertices")) {
            if (!jv.is_array() || jv.size() != 2)
                throw std::invalid_argument("vertex must be [x, y]");
            poly.vertices.push_back({jv[0].get<double>(), jv[1].get<double>()});
        }
        if (poly.size() < 3) throw std::invalid_argument("polygon with fewer than 3 vertices");
        s.polygons.push_back(std::move(poly));
    }
    if (!j.contains("gluings") || !j["gluings"].is_array())
        throw std::invalid_argument("surface JSON needs a gluings array");
    for (const auto& jg : j["gluings"]) {
        if (!jg.is_array() || jg.size() != 2)
            throw std::invalid_argument("gluing must pair two edges");
        EdgeRef a{jg[0].at(0).get<int>(), jg[0].at(1).get<int>()};
        EdgeRef b{jg[1].at(0).get<int>(), jg[1].at(1).get<int>()};
        auto in_range = [&](EdgeRef e) {
            return e.polygon >= 0 && e.polygon < static_cast<int>(s.polygons.size()) &&
                   e.edge >= 0 && e.edge < s.polygons[e.polygon].size();
        };
        if (!in_range(a) || !in_range(b)) throw std::invalid_argument("gluing index out of range");
        s.gluings.push_back({a, b});
    }
    return s;
}

void save_surface(const TranslationSurface& s, const std::string& path) {
    write_file(path, surface_to_json(s));
}

TranslationSurface load_surface(const std::string& path) {
    return surface_from_json(read_file(path));
}

RationalPolygonSpec polygon_spec_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.contains("vertices")) {
        std::vector<Vec2> verts;
        for (const auto& jv : j["vertices"])
            verts.push_back({jv.at(0).get<double>(), jv.at(1).get<double>()});
        return RationalPolygonSpec::from_vertices(verts);
    }
    RationalPolygonSpec spec;
    for (const auto& ja : j.at("angles"))
        spec.angles.push_back(AngleFrac(ja.at(0).get<std::int64_t>(), ja.at(1).get<std::int64_t>()));
    for (const auto& jl : j.at("lengths")) spec.lengths.push_back(jl.get<double>());
    if (j.contains("first_direction"))
        spec.first_direction = AngleFrac(j["first_direction"].at(0).get<std::int64_t>(),
                                         j["first_direction"].at(1).get<std::int64_t>());
    spec.check();
    return spec;
}

RationalPolygonSpec load_polygon_spec(const std::string& path) {
    return polygon_spec_from_json(read_file(path));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace flatsurf
