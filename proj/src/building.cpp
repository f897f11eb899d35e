#include "nestkit/building.hpp"

#include <algorithm>

namespace nestkit {

std::vector<int> BuildingSet::members() const { return carrier_elements(carrier); }

std::vector<int> carrier_elements(const ElementSet& carrier) {
    std::vector<int> out;
    for (auto i = carrier.find_first(); i != ElementSet::npos; i = carrier.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

ElementSet factors(const Semilattice& s, const BuildingSet& g, int x) {
    if (x == s.bottom()) throw error("factors of the bottom element");
    return s.poset().max_of(g.carrier & s.poset().down(x));
}

namespace {

// Checks that (y_1,...,y_k) -> join{y_i} is a poset isomorphism from the
// product of the intervals [0̂,f] onto [0̂,x]; fills the image list on success.
bool canonical_join_iso(const Semilattice& s, const std::vector<int>& factor_list, int x,
                        std::vector<int>* image_out) {
    const int n = s.size();
    std::vector<std::vector<int>> intervals;
    long long prod_size = 1;
    std::vector<int> box = s.interval_elements(s.bottom(), x);
    for (int f : factor_list) {
        intervals.push_back(s.interval_elements(s.bottom(), f));
        prod_size *= static_cast<long long>(intervals.back().size());
        if (prod_size > static_cast<long long>(box.size())) return false;
    }
    if (prod_size != static_cast<long long>(box.size())) return false;

    const int k = static_cast<int>(factor_list.size());
    const int m = static_cast<int>(prod_size);
    std::vector<int> tup(k, 0);
    std::vector<int> image(m);
    std::vector<std::vector<int>> comps(m, std::vector<int>(k));
    ElementSet seen(n);
    for (int t = 0; t < m; ++t) {
        ElementSet members(n);
        for (int c = 0; c < k; ++c) {
            comps[t][c] = intervals[c][tup[c]];
            members.set(comps[t][c]);
        }
        auto j = s.join_set(members);
        if (!j || !s.leq(*j, x) || seen.test(*j)) return false;
        seen.set(*j);
        image[t] = *j;
        // advance lexicographically, last component fastest
        for (int c = k - 1; c >= 0; --c) {
            if (++tup[c] < static_cast<int>(intervals[c].size())) break;
            tup[c] = 0;
        }
    }
    // bijective onto [0̂,x] by cardinality + injectivity; check order both ways
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            bool tuple_le = true;
            for (int c = 0; c < k && tuple_le; ++c)
                tuple_le = s.leq(comps[a][c], comps[b][c]);
            if (tuple_le != s.leq(image[a], image[b])) return false;
        }
    if (image_out) *image_out = std::move(image);
    return true;
}

}  // namespace

std::optional<BuildingSet> is_building(const Semilattice& s, const ElementSet& candidate,
                                       std::string* diagnostic) {
    const int n = s.size();
    if (candidate.size() != static_cast<std::size_t>(n))
        throw error("candidate set has wrong universe size");
    if (candidate.test(s.bottom())) throw error("candidate contains the bottom element");

    BuildingSet g;
    g.carrier = candidate;
    g.factor_map.assign(n, ElementSet(n));
    g.certificate.assign(n, {});
    for (int x = 0; x < n; ++x) {
        if (x == s.bottom()) continue;
        ElementSet below = candidate & s.poset().down(x);
        ElementSet fs = s.poset().max_of(below);
        if (fs.none()) {
            if (diagnostic)
                *diagnostic = "no candidate member below '" + s.label(x) + "'";
            return std::nullopt;
        }
        std::vector<int> factor_list = carrier_elements(fs);
        if (!canonical_join_iso(s, factor_list, x, &g.certificate[x])) {
            if (diagnostic)
                *diagnostic = "factor product of '" + s.label(x) +
                              "' is not isomorphic to its lower interval";
            return std::nullopt;
        }
        g.factor_map[x] = fs;
    }
    return g;
}

bool is_building_exhaustive(const Semilattice& s, const ElementSet& candidate) {
    const int n = s.size();
    if (candidate.test(s.bottom())) throw error("candidate contains the bottom element");
    for (int x = 0; x < n; ++x) {
        if (x == s.bottom()) continue;
        ElementSet fs = s.poset().max_of(candidate & s.poset().down(x));
        if (fs.none()) return false;
        std::vector<int> factor_list = carrier_elements(fs);
        std::vector<Poset> ints;
        std::vector<std::vector<int>> maps;
        for (int f : factor_list) {
            std::vector<int> m;
            ints.push_back(s.interval(s.bottom(), f, &m));
            maps.push_back(m);
        }
        Poset prod = product(ints);
        std::vector<int> box_map;
        Poset box = s.interval(s.bottom(), x, &box_map);
        if (prod.size() != box.size()) return false;
        // pin the unit tuple at each factor to that factor
        std::vector<std::pair<int, int>> fixed;
        const int k = static_cast<int>(factor_list.size());
        for (int c = 0; c < k; ++c) {
            // index of the tuple that is bottom except component c = f
            long long idx = 0;
            for (int d = 0; d < k; ++d) {
                long long pos = 0;
                if (d == c) {
                    auto it = std::find(maps[d].begin(), maps[d].end(), factor_list[d]);
                    pos = it - maps[d].begin();
                } else {
                    auto it = std::find(maps[d].begin(), maps[d].end(), s.bottom());
                    pos = it - maps[d].begin();
                }
                idx = idx * ints[d].size() + pos;
            }
            auto bt = std::find(box_map.begin(), box_map.end(), factor_list[c]);
            fixed.emplace_back(static_cast<int>(idx), static_cast<int>(bt - box_map.begin()));
        }
        if (!is_isomorphic_fixing(prod, box, fixed)) return false;
    }
    return true;
}

namespace {

// Searches antichains of size >= 2 below x whose join is x and whose factor
// product is isomorphic to [0̂,x].
bool is_reducible(const Semilattice& s, int x) {
    std::vector<int> below;
    for (int y = 0; y < s.size(); ++y)
        if (y != s.bottom() && y != x && s.lt(y, x)) below.push_back(y);
    std::vector<int> chosen;
    ElementSet members(static_cast<std::size_t>(s.size()));
    struct Rec {
        const Semilattice& s;
        const std::vector<int>& below;
        std::vector<int>& chosen;
        ElementSet& members;
        int x;
        bool go(std::size_t start) {
            if (chosen.size() >= 2) {
                auto j = s.join_set(members);
                if (j && *j == x && canonical_join_iso(s, chosen, x, nullptr)) return true;
            }
            for (std::size_t i = start; i < below.size(); ++i) {
                int cand = below[i];
                bool anti = true;
                for (int c : chosen)
                    if (s.poset().comparable(c, cand)) {
                        anti = false;
                        break;
                    }
                if (!anti) continue;
                chosen.push_back(cand);
                members.set(cand);
                if (go(i + 1)) return true;
                members.reset(cand);
                chosen.pop_back();
            }
            return false;
        }
    } rec{s, below, chosen, members, x};
    return rec.go(0);
}

}  // namespace

BuildingSet min_building(const Semilattice& s) {
    ElementSet irr(static_cast<std::size_t>(s.size()));
    for (int x = 0; x < s.size(); ++x) {
        if (x == s.bottom()) continue;
        if (!is_reducible(s, x)) irr.set(x);
    }
    std::string diag;
    auto g = is_building(s, irr, &diag);
    if (!g) throw error("irreducible elements fail the building test: " + diag);
    return *g;
}

BuildingSet max_building(const Semilattice& s) {
    auto g = is_building(s, s.nonbottom());
    if (!g) throw error("full semilattice above bottom fails the building test");
    return *g;
}

std::vector<BuildingSet> enumerate_building_sets(const Semilattice& s, int cap) {
    ElementSet nb = s.nonbottom();
    if (static_cast<int>(nb.count()) > cap) throw error("building-set enumeration cap exceeded");
    BuildingSet mn = min_building(s);
    std::vector<int> free;
    for (auto i = nb.find_first(); i != ElementSet::npos; i = nb.find_next(i))
        if (!mn.carrier.test(i)) free.push_back(static_cast<int>(i));
    const int fk = static_cast<int>(free.size());
    std::vector<BuildingSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fk); ++mask) {
        ElementSet cand = mn.carrier;
        for (int b = 0; b < fk; ++b)
            if (mask & (std::uint64_t{1} << b)) cand.set(free[b]);
        if (auto g = is_building(s, cand)) out.push_back(std::move(*g));
    }
    std::sort(out.begin(), out.end(), [](const BuildingSet& a, const BuildingSet& b) {
        if (a.carrier.count() != b.carrier.count()) return a.carrier.count() < b.carrier.count();
        return carrier_elements(a.carrier) < carrier_elements(b.carrier);
    });
    return out;
}

namespace {

// Antichains of size >= 2 inside the members list, join checked against carrier.
bool nested_scan(const Semilattice& s, const ElementSet& carrier, const std::vector<int>& members) {
    std::vector<int> chosen;
    ElementSet chosen_set(static_cast<std::size_t>(s.size()));
    struct Rec {
        const Semilattice& s;
        const ElementSet& carrier;
        const std::vector<int>& members;
        std::vector<int>& chosen;
        ElementSet& chosen_set;
        bool go(std::size_t start) {
            if (chosen.size() >= 2) {
                auto j = s.join_set(chosen_set);
                if (!j || carrier.test(*j)) return false;
            }
            for (std::size_t i = start; i < members.size(); ++i) {
                int cand = members[i];
                bool anti = true;
                for (int c : chosen)
                    if (s.poset().comparable(c, cand)) {
                        anti = false;
                        break;
                    }
                if (!anti) continue;
                chosen.push_back(cand);
                chosen_set.set(cand);
                bool ok = go(i + 1);
                chosen_set.reset(cand);
                chosen.pop_back();
                if (!ok) return false;
            }
            return true;
        }
    } rec{s, carrier, members, chosen, chosen_set};
    return rec.go(0);
}

}  // namespace

bool is_nested(const Semilattice& s, const BuildingSet& g, const ElementSet& cand) {
    if (!cand.is_subset_of(g.carrier))
        throw error("nested candidate is not a subset of the building set");
    return nested_scan(s, g.carrier, carrier_elements(cand));
}

SimplicialComplex nested_complex(const Semilattice& s, const BuildingSet& g) {
    const std::vector<int> verts = carrier_elements(g.carrier);
    const int nv = static_cast<int>(verts.size());
    std::vector<std::string> labels(nv);
    for (int v = 0; v < nv; ++v) labels[v] = s.label(verts[v]);

    std::vector<std::vector<int>> faces;
    faces.push_back({});
    const std::size_t cap = face_cap();

    // Incremental extension: adding e to a nested set only creates antichains
    // containing e, so it suffices to scan antichains of incomparables joined
    // with e.
    struct Rec {
        const Semilattice& s;
        const BuildingSet& g;
        const std::vector<int>& verts;
        std::vector<std::vector<int>>& faces;
        std::size_t cap;

        bool extension_ok(const std::vector<int>& face_elems, int e) {
            std::vector<int> incomp;
            for (int u : face_elems)
                if (!s.poset().comparable(u, e)) incomp.push_back(u);
            // every nonempty antichain A' of incomp: join(A' + e) exists, not in carrier
            std::vector<int> chosen;
            ElementSet set(static_cast<std::size_t>(s.size()));
            set.set(e);
            struct Sub {
                const Semilattice& s;
                const ElementSet& carrier;
                const std::vector<int>& incomp;
                std::vector<int>& chosen;
                ElementSet& set;
                bool go(std::size_t start) {
                    if (!chosen.empty()) {
                        auto j = s.join_set(set);
                        if (!j || carrier.test(*j)) return false;
                    }
                    for (std::size_t i = start; i < incomp.size(); ++i) {
                        int cand = incomp[i];
                        bool anti = true;
                        for (int c : chosen)
                            if (s.poset().comparable(c, cand)) {
                                anti = false;
                                break;
                            }
                        if (!anti) continue;
                        chosen.push_back(cand);
                        set.set(cand);
                        bool ok = go(i + 1);
                        set.reset(cand);
                        chosen.pop_back();
                        if (!ok) return false;
                    }
                    return true;
                }
            } sub{s, g.carrier, incomp, chosen, set};
            return sub.go(0);
        }

        void go(std::vector<int>& face_verts, std::vector<int>& face_elems, int start) {
            for (int v = start; v < static_cast<int>(verts.size()); ++v) {
                if (!extension_ok(face_elems, verts[v])) continue;
                face_verts.push_back(v);
                face_elems.push_back(verts[v]);
                faces.push_back(face_verts);
                if (faces.size() > cap) throw error("face cap exceeded");
                go(face_verts, face_elems, v + 1);
                face_verts.pop_back();
                face_elems.pop_back();
            }
        }
    } rec{s, g, verts, faces, cap};
    std::vector<int> fv, fe;
    rec.go(fv, fe, 0);
    return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

SimplicialComplex crosscut_complex(const Semilattice& s, const ElementSet& crosscut) {
    if (crosscut != s.atom_set()) throw error("crosscut must equal the atom set");
    const std::vector<int> verts = carrier_elements(crosscut);
    const int nv = static_cast<int>(verts.size());
    std::vector<std::string> labels(nv);
    for (int v = 0; v < nv; ++v) labels[v] = s.label(verts[v]);

    std::vector<std::vector<int>> faces;
    faces.push_back({});
    const std::size_t cap = face_cap();
    // extend while a common upper bound survives
    struct Rec {
        const Semilattice& s;
        const std::vector<int>& verts;
        std::vector<std::vector<int>>& faces;
        std::size_t cap;
        void go(std::vector<int>& face, const ElementSet& ub, int start) {
            for (int v = start; v < static_cast<int>(verts.size()); ++v) {
                ElementSet nub = ub & s.poset().up(verts[v]);
                if (nub.none()) continue;
                face.push_back(v);
                faces.push_back(face);
                if (faces.size() > cap) throw error("face cap exceeded");
                go(face, nub, v + 1);
                face.pop_back();
            }
        }
    } rec{s, verts, faces, cap};
    std::vector<int> face;
    rec.go(face, s.poset().all(), 0);
    return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

}  // namespace nestkit
