#include "nestkit/topology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nestkit {

std::optional<int> is_join_contractible(const Semilattice& ambient, const ElementSet& carrier) {
    for (auto x0 = carrier.find_first(); x0 != ElementSet::npos; x0 = carrier.find_next(x0)) {
        bool ok = true;
        for (auto x = carrier.find_first(); x != ElementSet::npos && ok;
             x = carrier.find_next(x)) {
            auto j = ambient.join(static_cast<int>(x0), static_cast<int>(x));
            ok = j.has_value() && carrier.test(*j);
        }
        if (ok) return static_cast<int>(x0);
    }
    return std::nullopt;
}

Semilattice face_semilattice(const SimplicialComplex& c) {
    const auto& faces = c.faces();
    const int m = static_cast<int>(faces.size());
    std::vector<std::string> labels(m);
    std::vector<ElementSet> up(m, ElementSet(m));
    for (int i = 0; i < m; ++i) {
        std::ostringstream os;
        os << "{";
        for (std::size_t k = 0; k < faces[i].size(); ++k) {
            if (k) os << ",";
            os << c.vertex_labels()[faces[i][k]];
        }
        os << "}";
        labels[i] = os.str();
        for (int j = 0; j < m; ++j)
            if (std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                              faces[i].end()))
                up[i].set(j);
    }
    return Semilattice::validate(Poset::from_relation(std::move(labels), up));
}

QuillenFiberReport quillen_fiber_report(const Semilattice& s, const BuildingSet& g) {
    QuillenFiberReport rep;
    SimplicialComplex nc = nested_complex(s, g);
    const std::vector<int> verts = carrier_elements(g.carrier);

    // nonempty faces with their element sets and joins
    struct Member {
        std::vector<int> face;   // vertex indices
        ElementSet elems;        // element indices
        int join;
    };
    std::vector<Member> members;
    for (const auto& f : nc.faces()) {
        if (f.empty()) continue;
        ElementSet e(static_cast<std::size_t>(s.size()));
        for (int v : f) e.set(verts[v]);
        auto j = s.join_set(e);
        if (!j) throw error("nested set without a join");  // cannot happen for nested sets
        members.push_back({f, std::move(e), *j});
    }

    for (int x = 0; x < s.size(); ++x) {
        if (x == s.bottom()) continue;
        FiberCheck check;
        check.element = x;
        check.in_building = g.carrier.test(x);

        ElementSet witness(static_cast<std::size_t>(s.size()));
        if (check.in_building)
            witness.set(x);
        else
            witness = g.factor_map[x];

        std::vector<int> fiber;  // indices into members
        for (int i = 0; i < static_cast<int>(members.size()); ++i)
            if (s.leq(members[i].join, x)) fiber.push_back(i);
        check.fiber_size = fiber.size();

        // the witness itself must be a fiber member
        bool witness_ok = false;
        {
            auto jw = s.join_set(witness);
            witness_ok = jw && s.leq(*jw, x) && is_nested(s, g, witness);
        }
        check.case_pass = witness_ok;
        for (int i : fiber) {
            if (!check.case_pass) break;
            ElementSet u = members[i].elems | witness;
            auto ju = s.join_set(u);
            check.case_pass = ju && s.leq(*ju, x) && is_nested(s, g, u);
        }

        // order complex of the fiber poset (inclusion order on nested sets)
        const int fm = static_cast<int>(fiber.size());
        std::vector<std::string> labels(fm);
        std::vector<ElementSet> up(fm, ElementSet(fm));
        for (int a = 0; a < fm; ++a) {
            std::ostringstream os;
            os << "f" << fiber[a];
            labels[a] = os.str();
            for (int b = 0; b < fm; ++b)
                if (members[fiber[a]].elems.is_subset_of(members[fiber[b]].elems)) up[a].set(b);
        }
        Poset fiber_poset = Poset::from_relation(std::move(labels), up);
        check.homology_trivial = reduced_homology(order_complex(fiber_poset)).all_trivial();

        if (!check.pass()) rep.all_pass = false;
        rep.fibers.push_back(std::move(check));
    }
    return rep;
}

HomologyAgreementReport homology_agreement(const Semilattice& s, const BuildingSet& g) {
    HomologyAgreementReport rep;
    rep.nested = reduced_homology(nested_complex(s, g));
    rep.order = reduced_homology(order_complex(s.poset().induced(s.nonbottom())));
    rep.agree = rep.nested == rep.order;
    return rep;
}

bool same_faces_by_labels(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::set<std::vector<std::string>> fa, fb;
    for (const auto& f : a.faces()) {
        std::vector<std::string> l;
        for (int v : f) l.push_back(a.vertex_labels()[v]);
        std::sort(l.begin(), l.end());
        fa.insert(std::move(l));
    }
    for (const auto& f : b.faces()) {
        std::vector<std::string> l;
        for (int v : f) l.push_back(b.vertex_labels()[v]);
        std::sort(l.begin(), l.end());
        fb.insert(std::move(l));
    }
    return fa == fb;
}

}  // namespace nestkit
