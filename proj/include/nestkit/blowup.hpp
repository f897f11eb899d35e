// Combinatorial blowup of a meet-semilattice at an element.
#pragma once

#include "nestkit/poset.hpp"

#include <vector>

namespace nestkit {

struct BlownElement {
    int origin;   // element index in the source semilattice
    bool hatted;  // hatted copies exist for Y with Y ∨ x defined
};

struct BlowupPoset {
    Poset poset;
    std::vector<BlownElement> elements;  // per output index

    int plain_index(int origin) const;
    int hat_index(int origin) const;  // -1 if absent
};

struct BlowupResult {
    Semilattice lattice;
    std::vector<BlownElement> elements;

    int plain_index(int origin) const;
    int hat_index(int origin) const;
};

// The order of Bl_x L without the meet-table validation (the order rules alone).
BlowupPoset blowup_poset(const Semilattice& s, int x);

// Bl_x L as a meet-semilattice; the semilattice property of the result is
// checked, not assumed. Requires x != bottom. Hatted labels render as "label^".
BlowupResult blowup(const Semilattice& s, int x);

// Named alias for face posets of fans/complexes (bottom = zero cone/empty face).
BlowupResult blowup_face_poset(const Semilattice& fp, int face);

}  // namespace nestkit
