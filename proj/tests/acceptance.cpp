// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// --slow adds the partition(5) checkpoint; --seed fixes the support sampling.
#include "nestkit/blowup.hpp"
#include "nestkit/building.hpp"
#include "nestkit/catalog.hpp"
#include "nestkit/fan.hpp"
#include "nestkit/homology.hpp"
#include "nestkit/topology.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace nestkit;

namespace {

struct Member {
    std::string name;
    Semilattice s;
    std::vector<BuildingSet> buildings;
    RealizationCache cache;
    bool in_homology_corpus = true;
};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---- criterion 1: homology agreement over the corpus ------------------------

void criterion1(std::vector<Member>& corpus, Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    long long pairs = 0;
    for (auto& m : corpus) {
        if (!m.in_homology_corpus) continue;
        HomologyResult order =
            reduced_homology(order_complex(m.s.poset().induced(m.s.nonbottom())));
        for (const auto& g : m.buildings) {
            HomologyResult nested = reduced_homology(nested_complex(m.s, g));
            ++pairs;
            if (!(nested == order)) {
                out.pass = false;
                out.detail << " mismatch at " << m.name << " |G|=" << g.carrier.count();
                return;
            }
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 120.0) {
        out.pass = false;
        out.detail << " runtime " << dt << "s exceeds 120s";
    }
    out.detail << pairs << " (L,G) pairs agree, " << dt << "s";
}

// ---- criterion 2: quantitative homology checkpoints -------------------------

void criterion2(bool slow, Outcome& out) {
    Semilattice rt4 = remove_top(partition_lattice(4));
    BuildingSet mn = min_building(rt4);
    SimplicialComplex nested = nested_complex(rt4, mn);
    SimplicialComplex order = order_complex(rt4.poset().induced(rt4.nonbottom()));
    auto expect = [&](const HomologyResult& h, int dim, long long rank) {
        if (h.at(dim).rank != rank || !h.at(dim).torsion.empty()) return false;
        for (const auto& [d, g] : h.groups)
            if (d != dim && !g.trivial()) return false;
        return true;
    };
    HomologyResult hn = reduced_homology(nested), ho = reduced_homology(order);
    bool ok = expect(hn, 1, 6) && expect(ho, 1, 6);
    // independent elementary-operations SNF oracle on both complexes
    ok = ok && oracles::naive_reduced_homology(nested) == hn;
    ok = ok && oracles::naive_reduced_homology(order) == ho;
    out.detail << "remove_top(partition(4)): rank 6 in dim 1";
    if (!ok) {
        out.pass = false;
        out.detail << " FAILED [nested: " << hn.to_string() << ", order: " << ho.to_string()
                   << "]";
        return;
    }
    if (slow) {
        auto t0 = std::chrono::steady_clock::now();
        Semilattice rt5 = remove_top(partition_lattice(5));
        BuildingSet mn5 = min_building(rt5);
        SimplicialComplex nested5 = nested_complex(rt5, mn5);
        SimplicialComplex order5 = order_complex(rt5.poset().induced(rt5.nonbottom()));
        HomologyResult hn5 = reduced_homology(nested5), ho5 = reduced_homology(order5);
        bool ok5 = expect(hn5, 2, 24) && expect(ho5, 2, 24);
        ok5 = ok5 && oracles::naive_reduced_homology(nested5) == hn5;
        ok5 = ok5 && oracles::naive_reduced_homology(order5) == ho5;
        double dt = seconds_since(t0);
        if (!ok5 || dt >= 600.0) {
            out.pass = false;
            out.detail << "; remove_top(partition(5)) FAILED [nested: " << hn5.to_string()
                       << ", order: " << ho5.to_string() << ", " << dt << "s]";
            return;
        }
        out.detail << "; remove_top(partition(5)): rank 24 in dim 2, " << dt << "s";
    }
}

// ---- criterion 3: the subdivision theorem over all nested pairs --------------

void criterion3(std::vector<Member>& corpus, Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    long long pairs = 0, steps = 0;
    for (auto& m : corpus) {
        if (!m.s.is_atomic()) continue;
        for (const auto& g : m.buildings)
            for (const auto& h : m.buildings) {
                if (!h.carrier.is_subset_of(g.carrier)) continue;
                auto rep = subdivision_sequence(m.s, g, h, &m.cache);
                ++pairs;
                steps += static_cast<long long>(rep.steps.size());
                if (!rep.all_pass) {
                    out.pass = false;
                    out.detail << " failure at " << m.name << " |G|=" << g.carrier.count()
                               << " |H|=" << h.carrier.count();
                    return;
                }
            }
    }
    out.detail << pairs << " nested pairs, " << steps << " subdivision steps, "
               << seconds_since(t0) << "s";
}

// ---- criterion 4: stellar subdivision / blowup duality -----------------------

void criterion4(std::vector<Member>& corpus, Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    long long checks = 0;
    for (auto& m : corpus) {
        if (!m.s.is_atomic()) continue;
        for (const auto& g : m.buildings) {
            const Fan& f = m.cache.fan(m.s, g);
            const FanFacePoset& before = m.cache.fp(m.s, g);
            std::vector<int> ray_map(f.rays.size());
            for (std::size_t i = 0; i < f.rays.size(); ++i) ray_map[i] = static_cast<int>(i);
            for (const auto& cone : f.cones) {
                if (cone.empty()) continue;
                RayVector v(f.ambient_dim, 0);
                for (int r : cone)
                    for (int i = 0; i < f.ambient_dim; ++i) v[i] += f.rays[r][i];
                Fan sub = stellar_subdivide(f, cone, v);
                ++checks;
                if (!verify_blowup_duality(before, before.element_of(cone), face_poset(sub),
                                           ray_map, sub.ray_index(primitive_vector(v)))) {
                    out.pass = false;
                    out.detail << " failure at " << m.name << " |G|=" << g.carrier.count()
                               << " cone size " << cone.size();
                    return;
                }
            }
        }
    }
    out.detail << checks << " cones checked, " << seconds_since(t0) << "s";
}

// ---- criterion 5: blowup closure ---------------------------------------------

void criterion5(std::vector<Member>& corpus, Outcome& out) {
    long long checks = 0;
    for (auto& m : corpus) {
        for (int x = 0; x < m.s.size(); ++x) {
            if (x == m.s.bottom()) continue;
            try {
                blowup(m.s, x);  // validates the meet-semilattice property
                ++checks;
            } catch (const error& e) {
                out.pass = false;
                out.detail << " failure at " << m.name << " x='" << m.s.label(x)
                           << "': " << e.what();
                return;
            }
        }
    }
    out.detail << checks << " blowups validated";
}

// ---- criterion 6: identity checks ---------------------------------------------

void criterion6(std::vector<Member>& corpus, Outcome& out) {
    // nested complex of the maximal building set = order complex
    for (auto& m : corpus) {
        auto nmax = nested_complex(m.s, max_building(m.s));
        auto oc = order_complex(m.s.poset().induced(m.s.nonbottom()));
        if (!same_faces_by_labels(nmax, oc)) {
            out.pass = false;
            out.detail << " nested(max) != order complex on " << m.name;
            return;
        }
    }
    // crosscut complexes on simplicial posets
    std::vector<std::pair<std::string, Semilattice>> simplicial;
    simplicial.emplace_back("boolean(2)", boolean_lattice(2));
    simplicial.emplace_back("boolean(3)", boolean_lattice(3));
    simplicial.emplace_back("boolean(4)", boolean_lattice(4));
    simplicial.emplace_back("twin-triangles",
                            face_semilattice(SimplicialComplex::from_faces(
                                {"p", "q", "r", "s"}, {{0, 1, 2}, {1, 2, 3}})));
    simplicial.emplace_back("hollow-triangle",
                            face_semilattice(SimplicialComplex::from_faces(
                                {"p", "q", "r"}, {{0, 1}, {1, 2}, {0, 2}})));
    for (auto& [name, s] : simplicial) {
        auto ab = is_building(s, s.atom_set());
        if (!ab || !same_faces_by_labels(crosscut_complex(s, s.atom_set()),
                                         nested_complex(s, *ab))) {
            out.pass = false;
            out.detail << " crosscut != nested on " << name;
            return;
        }
    }
    // cone with apex the top, base = nested complex of the truncation
    long long cone_checks = 0;
    for (auto& m : corpus) {
        auto top_opt = m.s.poset().unique_maximum();
        if (!top_opt) continue;
        int top = *top_opt;
        Semilattice cut = remove_top(m.s);
        for (const auto& g : m.buildings) {
            if (!g.carrier.test(top)) continue;
            SimplicialComplex nc = nested_complex(m.s, g);
            int apex = -1;
            for (int v = 0; v < nc.vertex_count(); ++v)
                if (nc.vertex_labels()[v] == m.s.label(top)) apex = v;
            bool ok = apex >= 0 && is_cone(nc, apex);
            if (ok) {
                ElementSet small(static_cast<std::size_t>(cut.size()));
                for (int e : g.members())
                    if (e != top) small.set(cut.index_of(m.s.label(e)));
                auto gcut = is_building(cut, small);
                ok = gcut.has_value() &&
                     same_faces_by_labels(nc.restriction_without_vertex(apex),
                                          nested_complex(cut, *gcut));
            }
            ++cone_checks;
            if (!ok) {
                out.pass = false;
                out.detail << " cone/base identity failed on " << m.name
                           << " |G|=" << g.carrier.count();
                return;
            }
        }
    }
    out.detail << "order-complex, crosscut, and " << cone_checks << " cone/base identities";
}

// ---- criterion 7: fiber evidence -----------------------------------------------

void criterion7(std::vector<Member>& corpus, Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    long long reports = 0;
    for (auto& m : corpus) {
        if (!m.in_homology_corpus) continue;
        for (const auto& g : m.buildings) {
            auto rep = quillen_fiber_report(m.s, g);
            ++reports;
            if (!rep.all_pass) {
                for (const auto& f : rep.fibers)
                    if (!f.pass()) {
                        out.pass = false;
                        out.detail << " failure at " << m.name << " |G|=" << g.carrier.count()
                                   << " x='" << m.s.label(f.element) << "'"
                                   << (f.case_pass ? " homology" : " case check");
                        return;
                    }
            }
        }
    }
    out.detail << reports << " fiber reports, " << seconds_since(t0) << "s";
}

// ---- criterion 8: oracle equivalences -------------------------------------------

// reducibility by exhaustive qualifying-isomorphism search (independent of the
// canonical join map used by the library)
bool oracle_reducible(const Semilattice& s, int x) {
    std::vector<int> below;
    for (int y = 0; y < s.size(); ++y)
        if (y != s.bottom() && y != x && s.lt(y, x)) below.push_back(y);
    std::vector<int> chosen;
    struct Rec {
        const Semilattice& s;
        const std::vector<int>& below;
        std::vector<int>& chosen;
        int x;
        bool qualifies() {
            ElementSet members(static_cast<std::size_t>(s.size()));
            for (int c : chosen) members.set(c);
            auto j = s.join_set(members);
            if (!j || *j != x) return false;
            std::vector<Poset> ints;
            std::vector<std::vector<int>> maps;
            for (int f : chosen) {
                std::vector<int> mp;
                ints.push_back(s.interval(s.bottom(), f, &mp));
                maps.push_back(mp);
            }
            Poset prod = product(ints);
            std::vector<int> box_map;
            Poset box = s.interval(s.bottom(), x, &box_map);
            if (prod.size() != box.size()) return false;
            std::vector<std::pair<int, int>> fixed;
            const int k = static_cast<int>(chosen.size());
            for (int c = 0; c < k; ++c) {
                long long idx = 0;
                for (int d = 0; d < k; ++d) {
                    long long pos = 0;
                    int want = (d == c) ? chosen[d] : s.bottom();
                    for (std::size_t q = 0; q < maps[d].size(); ++q)
                        if (maps[d][q] == want) pos = static_cast<long long>(q);
                    idx = idx * ints[d].size() + pos;
                }
                int target = -1;
                for (std::size_t q = 0; q < box_map.size(); ++q)
                    if (box_map[q] == chosen[c]) target = static_cast<int>(q);
                fixed.emplace_back(static_cast<int>(idx), target);
            }
            return is_isomorphic_fixing(prod, box, fixed).has_value();
        }
        bool go(std::size_t start) {
            if (chosen.size() >= 2 && qualifies()) return true;
            for (std::size_t i = start; i < below.size(); ++i) {
                bool anti = true;
                for (int c : chosen)
                    if (s.poset().comparable(c, below[i])) {
                        anti = false;
                        break;
                    }
                if (!anti) continue;
                chosen.push_back(below[i]);
                if (go(i + 1)) return true;
                chosen.pop_back();
            }
            return false;
        }
    } rec{s, below, chosen, x};
    return rec.go(0);
}

void criterion8(std::vector<Member>& corpus, std::uint64_t seed, Outcome& out) {
    // (a) canonical building test vs exhaustive isomorphism search, <= 10 elements
    long long candidates = 0;
    for (auto& m : corpus) {
        if (m.s.size() > 10) continue;
        std::vector<int> nb = carrier_elements(m.s.nonbottom());
        for (std::uint32_t mask = 0; mask < (1u << nb.size()); ++mask) {
            ElementSet cand(static_cast<std::size_t>(m.s.size()));
            for (std::size_t b = 0; b < nb.size(); ++b)
                if (mask & (1u << b)) cand.set(nb[b]);
            ++candidates;
            if (is_building(m.s, cand).has_value() != is_building_exhaustive(m.s, cand)) {
                out.pass = false;
                out.detail << " canonical/exhaustive disagreement on " << m.name;
                return;
            }
        }
    }
    // (b) min_building vs the exhaustive-isomorphism decomposability oracle
    for (auto& m : corpus) {
        ElementSet irr(static_cast<std::size_t>(m.s.size()));
        for (int x = 0; x < m.s.size(); ++x) {
            if (x == m.s.bottom()) continue;
            if (!oracle_reducible(m.s, x)) irr.set(x);
        }
        if (irr != min_building(m.s).carrier) {
            out.pass = false;
            out.detail << " min_building disagreement on " << m.name;
            return;
        }
    }
    // (c) SNF vs the elementary-operations oracle on random matrices
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<Int>> dense(rows, std::vector<Int>(cols));
        SparseIntMatrix sparse(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                long long v = static_cast<long long>(rng() % 11) - 5;
                dense[i][j] = v;
                sparse.set(i, j, v);
            }
        if (std::move(sparse).invariant_factors() != oracles::naive_smith(dense)) {
            out.pass = false;
            out.detail << " SNF disagreement on trial " << trial;
            return;
        }
    }
    out.detail << candidates << " building candidates, min-building on all members, "
               << "200 SNF matrices";
}

// ---- criterion 9: simpliciality and support sampling ------------------------------

void criterion9(std::vector<Member>& corpus, std::uint64_t seed, Outcome& out) {
    auto t0 = std::chrono::steady_clock::now();
    long long rank_checks = 0, pair_checks = 0;
    for (auto& m : corpus) {
        if (!m.s.is_atomic()) continue;
        // characteristic vectors of every nested set are linearly independent
        for (const auto& g : m.buildings) {
            const Fan& f = m.cache.fan(m.s, g);
            for (const auto& c : f.cones) {
                std::vector<std::vector<long long>> mat;
                for (int r : c) mat.push_back(f.rays[r]);
                ++rank_checks;
                if (rational_rank(mat) != static_cast<int>(c.size())) {
                    out.pass = false;
                    out.detail << " dependent nested set in " << m.name;
                    return;
                }
            }
        }
        // membership of the seeded points, classified once per fan
        const int dim = static_cast<int>(m.s.atoms().size());
        auto points = sample_points(dim, 1000, seed);
        std::vector<std::vector<bool>> classes(m.buildings.size());
        for (std::size_t i = 0; i < m.buildings.size(); ++i) {
            const Fan& f = m.cache.fan(m.s, m.buildings[i]);
            classes[i].reserve(points.size());
            for (const auto& p : points) classes[i].push_back(fan_contains(f, p));
        }
        for (std::size_t i = 0; i < m.buildings.size(); ++i)
            for (std::size_t j = 0; j < m.buildings.size(); ++j) {
                if (!m.buildings[j].carrier.is_subset_of(m.buildings[i].carrier)) continue;
                ++pair_checks;
                if (classes[i] != classes[j]) {
                    out.pass = false;
                    out.detail << " support disagreement in " << m.name << " |G|="
                               << m.buildings[i].carrier.count()
                               << " |H|=" << m.buildings[j].carrier.count();
                    return;
                }
            }
        // bind the library op itself on the extremes
        auto rep = sample_support_equality(m.cache.fan(m.s, m.buildings.front()),
                                           m.cache.fan(m.s, m.buildings.back()), 1000, seed);
        if (!rep.agree() || rep.agreements != 1000) {
            out.pass = false;
            out.detail << " sample_support_equality failed on " << m.name;
            return;
        }
    }
    out.detail << rank_checks << " rank checks, " << pair_checks
               << " chain endpoint comparisons at 1000 points each, " << seconds_since(t0)
               << "s";
}

}  // namespace

int main(int argc, char** argv) {
    bool slow = false;
    std::uint64_t seed = 20338;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--slow") == 0) slow = true;
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            seed = std::strtoull(argv[i + 1], nullptr, 10);
    }

    auto t_total = std::chrono::steady_clock::now();
    std::vector<Member> corpus;
    auto add = [&](const std::string& name, Semilattice s, bool in_hom = true) {
        Member m;
        m.name = name;
        m.s = std::move(s);
        m.buildings = enumerate_building_sets(m.s);
        m.in_homology_corpus = in_hom;
        corpus.push_back(std::move(m));
    };
    std::cout << "building corpus..." << std::flush;
    add("boolean(2)", boolean_lattice(2));
    add("boolean(3)", boolean_lattice(3));
    add("boolean(4)", boolean_lattice(4));
    add("partition(3)", partition_lattice(3));
    add("partition(4)", partition_lattice(4));
    add("bond_lattice(K4)",
        bond_lattice(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
    add("remove_top(partition(4))", remove_top(partition_lattice(4)));
    std::cout << " done (" << seconds_since(t_total) << "s)\n";
    std::size_t total_buildings = 0;
    for (const auto& m : corpus) total_buildings += m.buildings.size();
    std::cout << "corpus: " << corpus.size() << " semilattices, " << total_buildings
              << " building sets, seed " << seed << (slow ? ", slow checks on" : "") << "\n";

    struct Row {
        int id;
        const char* title;
        Outcome out;
        double time = 0;
    };
    std::vector<Row> rows;
    auto run = [&](int id, const char* title, auto&& fn) {
        Row row{id, title, {}, 0};
        auto t0 = std::chrono::steady_clock::now();
        fn(row.out);
        row.time = seconds_since(t0);
        rows.push_back(std::move(row));
    };

    run(1, "homology agreement N(L,G) vs order complex",
        [&](Outcome& o) { criterion1(corpus, o); });
    run(2, "quantitative homology checkpoints", [&](Outcome& o) { criterion2(slow, o); });
    run(3, "stellar subdivision chains between building sets",
        [&](Outcome& o) { criterion3(corpus, o); });
    run(4, "face poset of stellar subdivision equals combinatorial blowup",
        [&](Outcome& o) { criterion4(corpus, o); });
    run(5, "combinatorial blowups are meet-semilattices",
        [&](Outcome& o) { criterion5(corpus, o); });
    run(6, "order-complex, crosscut, and cone identities",
        [&](Outcome& o) { criterion6(corpus, o); });
    run(7, "quillen fibers: case witnesses and trivial homology",
        [&](Outcome& o) { criterion7(corpus, o); });
    run(8, "oracle equivalences (building test, min building, SNF)",
        [&](Outcome& o) { criterion8(corpus, seed, o); });
    run(9, "simpliciality and sampled support equality",
        [&](Outcome& o) { criterion9(corpus, seed, o); });

    bool all = true;
    for (auto& r : rows) {
        std::cout << (r.out.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": "
                  << r.title << " — " << r.out.detail.str() << " (" << r.time << "s)\n";
        all = all && r.out.pass;
    }
    std::cout << (all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " in "
              << seconds_since(t_total) << "s\n";
    return all ? 0 : 1;
}
