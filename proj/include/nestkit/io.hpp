// JSON serialization for posets, complexes, fans, and reports.
#pragma once

#include "nestkit/building.hpp"
#include "nestkit/fan.hpp"
#include "nestkit/homology.hpp"
#include "nestkit/poset.hpp"
#include "nestkit/simplicial.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace nestkit {

using json = nlohmann::ordered_json;

json poset_to_json(const Poset& p);
Poset poset_from_json(const json& j);

json complex_to_json(const SimplicialComplex& c);
SimplicialComplex complex_from_json(const json& j);

json fan_to_json(const Fan& f);
Fan fan_from_json(const json& j);

json homology_to_json(const HomologyResult& h);

// Building sets travel as arrays of element labels.
json building_to_json(const Semilattice& s, const BuildingSet& g);
ElementSet element_set_from_json(const Semilattice& s, const json& j);

json load_json_file(const std::string& path);

}  // namespace nestkit
