// Fiber contractibility evidence and homology-level verification of the
// nested-complex / order-complex equivalence.
#pragma once

#include "nestkit/building.hpp"
#include "nestkit/homology.hpp"
#include "nestkit/poset.hpp"
#include "nestkit/simplicial.hpp"

#include <optional>
#include <vector>

namespace nestkit {

// First element x0 of the carrier (index order) whose join with every carrier
// element exists in the ambient semilattice and lies in the carrier.
std::optional<int> is_join_contractible(const Semilattice& ambient, const ElementSet& carrier);

// Face semilattice of a complex: faces ordered by inclusion, bottom = {}.
// Element i of the result is faces()[i]; labels are brace lists of vertex labels.
Semilattice face_semilattice(const SimplicialComplex& c);

struct FiberCheck {
    int element = -1;        // x
    bool in_building = false;  // Case 1 (x in G) or Case 2 (witness = factors)
    bool case_pass = false;    // every fiber member absorbs the witness
    std::size_t fiber_size = 0;
    bool homology_trivial = false;
    bool pass() const { return case_pass && homology_trivial; }
};

struct QuillenFiberReport {
    std::vector<FiberCheck> fibers;  // one per element above bottom, index order
    bool all_pass = true;
};

// For each x: fiber = nonempty nested sets with join <= x, ordered by
// inclusion. Checks the case witness (x itself, or the factor set) against
// every member and computes the reduced homology of the fiber's order complex.
QuillenFiberReport quillen_fiber_report(const Semilattice& s, const BuildingSet& g);

struct HomologyAgreementReport {
    HomologyResult nested;
    HomologyResult order;
    bool agree = false;
};

// Reduced homology of N(L,G) versus the order complex of L minus bottom.
HomologyAgreementReport homology_agreement(const Semilattice& s, const BuildingSet& g);

// Face sets compared through vertex labels (vertex orders may differ).
bool same_faces_by_labels(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace nestkit
