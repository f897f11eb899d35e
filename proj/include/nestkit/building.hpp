// Building sets, factors, nested sets, and nested set complexes.
#pragma once

#include "nestkit/poset.hpp"
#include "nestkit/simplicial.hpp"

#include <optional>
#include <vector>

namespace nestkit {

// A validated building set: for every x above bottom the canonical join map
// from the product of the factor intervals onto [0̂,x] is a poset isomorphism.
struct BuildingSet {
    ElementSet carrier;
    // factor_map[x] = maximal carrier elements below x (empty row at bottom).
    std::vector<ElementSet> factor_map;
    // certificate[x] = image of the canonical map, indexed by product tuples in
    // lexicographic order (factors ascending, first factor slowest).
    std::vector<std::vector<int>> certificate;

    std::vector<int> members() const;  // ascending element indices
};

// Maximal carrier elements below x; requires x != bottom.
ElementSet factors(const Semilattice& s, const BuildingSet& g, int x);

// Canonical-join-map building test. On failure returns nullopt and, if given,
// a diagnostic naming the first failing element.
std::optional<BuildingSet> is_building(const Semilattice& s, const ElementSet& candidate,
                                       std::string* diagnostic = nullptr);

// Exhaustive oracle: searches for any product isomorphism sending the unit
// tuple at each factor to that factor. Exponential; for cross-validation only.
bool is_building_exhaustive(const Semilattice& s, const ElementSet& candidate);

// Irreducible elements (no nontrivial product decomposition of [0̂,x]).
BuildingSet min_building(const Semilattice& s);

// The full semilattice above bottom.
BuildingSet max_building(const Semilattice& s);

// All building sets containing the minimal one, ordered by (size, lex).
// Requires |L minus bottom| <= cap.
std::vector<BuildingSet> enumerate_building_sets(const Semilattice& s, int cap = 16);

// Every antichain of size >= 2 inside cand has a join that exists and lies
// outside the carrier. Requires cand ⊆ carrier.
bool is_nested(const Semilattice& s, const BuildingSet& g, const ElementSet& cand);

// Vertex v of nested/crosscut complexes corresponds to the v-th smallest
// carrier element; this returns that correspondence.
std::vector<int> carrier_elements(const ElementSet& carrier);

// Complex of all nested sets (vertices = carrier elements ascending).
SimplicialComplex nested_complex(const Semilattice& s, const BuildingSet& g);

// Complex of bounded-above atom subsets; requires crosscut == atom set.
SimplicialComplex crosscut_complex(const Semilattice& s, const ElementSet& crosscut);

}  // namespace nestkit
