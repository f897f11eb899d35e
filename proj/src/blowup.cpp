#include "nestkit/blowup.hpp"

namespace nestkit {

namespace {

int find_index(const std::vector<BlownElement>& elems, int origin, bool hatted) {
    for (int i = 0; i < static_cast<int>(elems.size()); ++i)
        if (elems[i].origin == origin && elems[i].hatted == hatted) return i;
    return -1;
}

}  // namespace

int BlowupPoset::plain_index(int origin) const { return find_index(elements, origin, false); }
int BlowupPoset::hat_index(int origin) const { return find_index(elements, origin, true); }
int BlowupResult::plain_index(int origin) const { return find_index(elements, origin, false); }
int BlowupResult::hat_index(int origin) const { return find_index(elements, origin, true); }

BlowupPoset blowup_poset(const Semilattice& s, int x) {
    if (x < 0 || x >= s.size()) throw error("blowup element not in the semilattice");
    if (x == s.bottom()) throw error("cannot blow up the bottom element");
    const int n = s.size();

    std::vector<BlownElement> elems;
    for (int y = 0; y < n; ++y)
        if (!s.leq(x, y)) elems.push_back({y, false});
    for (int y = 0; y < n; ++y)
        if (!s.leq(x, y) && s.join(y, x)) elems.push_back({y, true});

    const int m = static_cast<int>(elems.size());
    std::vector<std::string> labels(m);
    std::vector<ElementSet> up(m, ElementSet(m));
    for (int i = 0; i < m; ++i)
        labels[i] = s.label(elems[i].origin) + (elems[i].hatted ? "^" : "");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const auto &a = elems[i], &b = elems[j];
            bool le;
            if (a.hatted == b.hatted)
                le = s.leq(a.origin, b.origin);
            else if (!a.hatted && b.hatted)
                le = s.leq(a.origin, b.origin);  // Y ≺ Ẑ for Y ≤ Z
            else
                le = false;  // never Ŷ ≺ Z
            if (le) up[i].set(j);
        }
    BlowupPoset out;
    out.poset = Poset::from_relation(std::move(labels), up);
    out.elements = std::move(elems);
    return out;
}

BlowupResult blowup(const Semilattice& s, int x) {
    BlowupPoset bp = blowup_poset(s, x);
    BlowupResult out;
    out.lattice = Semilattice::validate(bp.poset);
    out.elements = std::move(bp.elements);
    return out;
}

BlowupResult blowup_face_poset(const Semilattice& fp, int face) { return blowup(fp, face); }

}  // namespace nestkit
