#include "nestkit/io.hpp"

#include <fstream>
#include <limits>

namespace nestkit {

json poset_to_json(const Poset& p) {
    json j;
    j["elements"] = p.labels();
    json covers = json::array();
    for (auto [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
    j["covers"] = covers;
    return j;
}

Poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw error("poset JSON needs 'elements' and 'covers'");
    std::vector<std::string> labels = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2) throw error("cover entries are [lo, hi] pairs");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return Poset::from_covers(labels, covers);
}

json complex_to_json(const SimplicialComplex& c) {
    json j;
    j["vertices"] = c.vertex_labels();
    j["facets"] = c.facets();
    return j;
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw error("complex JSON needs 'vertices' and 'facets'");
    std::vector<std::string> labels = j.at("vertices").get<std::vector<std::string>>();
    std::vector<std::vector<int>> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<std::vector<int>>());
    return SimplicialComplex::from_faces(std::move(labels), std::move(facets));
}

json fan_to_json(const Fan& f) {
    json j;
    j["rays"] = f.rays;
    j["cones"] = f.cones;
    if (!f.ray_labels.empty()) j["labels"] = f.ray_labels;
    return j;
}

Fan fan_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rays") || !j.contains("cones"))
        throw error("fan JSON needs 'rays' and 'cones'");
    std::vector<RayVector> rays;
    for (const auto& r : j.at("rays")) rays.push_back(r.get<RayVector>());
    if (rays.empty()) throw error("fan needs at least one ray coordinate to fix the dimension");
    const int dim = static_cast<int>(rays[0].size());
    std::vector<std::vector<int>> cones;
    for (const auto& c : j.at("cones")) cones.push_back(c.get<std::vector<int>>());
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return Fan::from_cones(dim, std::move(rays), std::move(cones), std::move(labels));
}

json homology_to_json(const HomologyResult& h) {
    json j = json::object();
    for (const auto& [d, g] : h.groups) {
        json entry;
        entry["rank"] = g.rank;
        json tors = json::array();
        for (const auto& t : g.torsion) {
            if (t <= Int(std::numeric_limits<long long>::max()))
                tors.push_back(static_cast<long long>(t));
            else
                tors.push_back(t.str());
        }
        entry["torsion"] = tors;
        j[std::to_string(d)] = entry;
    }
    return j;
}

json building_to_json(const Semilattice& s, const BuildingSet& g) {
    json j = json::array();
    for (int e : g.members()) j.push_back(s.label(e));
    return j;
}

ElementSet element_set_from_json(const Semilattice& s, const json& j) {
    if (!j.is_array()) throw error("element set JSON is an array of labels");
    ElementSet out(static_cast<std::size_t>(s.size()));
    for (const auto& l : j) {
        int idx = s.index_of(l.get<std::string>());
        if (idx < 0) throw error("unknown element label '" + l.get<std::string>() + "'");
        out.set(idx);
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw error("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

}  // namespace nestkit
