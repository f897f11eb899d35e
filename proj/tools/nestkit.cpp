// Command-line surface: catalog generation, validation, building sets,
// nested complexes, blowups, fans, subdivision chains, homology, and the
// combined verification run.
#include "nestkit/blowup.hpp"
#include "nestkit/building.hpp"
#include "nestkit/catalog.hpp"
#include "nestkit/fan.hpp"
#include "nestkit/homology.hpp"
#include "nestkit/io.hpp"
#include "nestkit/topology.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

using namespace nestkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

Semilattice load_semilattice(const std::string& path) {
    return Semilattice::validate(poset_from_json(load_json_file(path)));
}

BuildingSet load_building(const Semilattice& s, const std::string& path) {
    ElementSet carrier = element_set_from_json(s, load_json_file(path));
    std::string diag;
    auto g = is_building(s, carrier, &diag);
    if (!g) throw error("the given set is not a building set: " + diag);
    return *g;
}

std::string set_labels(const Semilattice& s, const ElementSet& set) {
    std::string out = "{";
    bool first = true;
    for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
        if (!first) out += ",";
        out += s.label(static_cast<int>(i));
        first = false;
    }
    return out + "}";
}

int cmd_validate(const std::string& path) {
    Poset p = poset_from_json(load_json_file(path));
    try {
        Semilattice s = Semilattice::validate(p);
        std::cout << "meet-semilattice: " << s.size() << " elements, bottom '"
                  << s.label(s.bottom()) << "', " << s.atoms().size() << " atoms, "
                  << (s.is_atomic() ? "atomic" : "not atomic") << "\n";
        return kExitOk;
    } catch (const error& e) {
        std::cout << "not a meet-semilattice: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
}

struct VerifyOptions {
    std::string poset_path;
    std::string building_path;
    bool all_building = false;
    bool slow = false;
    bool as_json = false;
    std::uint64_t seed = 1;
    long long trials = 1000;
};

int cmd_verify(const VerifyOptions& opt) {
    Semilattice s = load_semilattice(opt.poset_path);
    json out;
    out["poset"] = opt.poset_path;
    out["seed"] = opt.seed;
    out["checks"] = json::array();
    bool all_pass = true;
    std::vector<std::string> lines;
    auto note = [&](bool pass, const std::string& what) {
        lines.push_back(std::string(pass ? "pass  " : "FAIL  ") + what);
        if (!pass) all_pass = false;
        json entry;
        entry["check"] = what;
        entry["pass"] = pass;
        out["checks"].push_back(entry);
    };

    std::vector<BuildingSet> chosen;
    if (!opt.building_path.empty()) {
        chosen.push_back(load_building(s, opt.building_path));
    } else if (opt.all_building) {
        try {
            chosen = enumerate_building_sets(s);
        } catch (const error&) {
            // over the enumeration cap: min, max, and the chain between them
            chosen = building_chain(s, max_building(s), min_building(s));
        }
    } else {
        chosen.push_back(min_building(s));
        if (max_building(s).carrier != chosen.front().carrier)
            chosen.push_back(max_building(s));
    }

    for (const auto& g : chosen) {
        std::string tag = "G=" + set_labels(s, g.carrier);
        auto agree = homology_agreement(s, g);
        note(agree.agree, "homology agreement " + tag + " [nested: " +
                              agree.nested.to_string() + ", order: " +
                              agree.order.to_string() + "]");
        auto fibers = quillen_fiber_report(s, g);
        std::string first_bad;
        for (const auto& f : fibers.fibers)
            if (!f.pass()) {
                first_bad = " first failure at x='" + s.label(f.element) + "'";
                break;
            }
        note(fibers.all_pass, "quillen fibers " + tag + first_bad);
        int top = s.poset().unique_maximum().value_or(-1);
        if (top >= 0 && g.carrier.test(top)) {
            SimplicialComplex nc = nested_complex(s, g);
            int apex = -1;
            for (int v = 0; v < nc.vertex_count(); ++v)
                if (nc.vertex_labels()[v] == s.label(top)) apex = v;
            note(apex >= 0 && is_cone(nc, apex), "cone with apex top " + tag);
        }
    }

    {
        auto nmax = nested_complex(s, max_building(s));
        auto oc = order_complex(s.poset().induced(s.nonbottom()));
        note(same_faces_by_labels(nmax, oc), "nested(max) equals order complex");
    }

    // crosscut identity applies on simplicial posets
    {
        bool simplicial = true;
        for (int x = 0; x < s.size() && simplicial; ++x) {
            if (x == s.bottom()) continue;
            std::size_t expect = std::size_t{1} << s.atoms_below(x).count();
            simplicial = s.interval_elements(s.bottom(), x).size() == expect;
        }
        if (simplicial) {
            if (auto ab = is_building(s, s.atom_set())) {
                note(same_faces_by_labels(crosscut_complex(s, s.atom_set()),
                                          nested_complex(s, *ab)),
                     "crosscut equals nested complex of the atoms");
            }
        }
    }

    {
        bool ok = true;
        std::string witness;
        for (int x = 0; x < s.size(); ++x) {
            if (x == s.bottom()) continue;
            try {
                blowup(s, x);
            } catch (const error& e) {
                ok = false;
                witness = " at x='" + s.label(x) + "': " + e.what();
                break;
            }
        }
        note(ok, "blowup closure" + witness);
    }

    if (s.is_atomic()) {
        RealizationCache cache;
        for (const auto& g : chosen) {
            const Fan& f = cache.fan(s, g);
            const FanFacePoset& before = cache.fp(s, g);
            bool ok = true;
            std::string witness;
            for (const auto& cone : f.cones) {
                if (cone.empty()) continue;
                RayVector v(f.ambient_dim, 0);
                for (int r : cone)
                    for (int i = 0; i < f.ambient_dim; ++i) v[i] += f.rays[r][i];
                Fan sub = stellar_subdivide(f, cone, v);
                std::vector<int> ray_map(f.rays.size());
                for (std::size_t i = 0; i < f.rays.size(); ++i)
                    ray_map[i] = static_cast<int>(i);
                if (!verify_blowup_duality(before, before.element_of(cone), face_poset(sub),
                                           ray_map, sub.ray_index(primitive_vector(v)))) {
                    ok = false;
                    ElementSet e(static_cast<std::size_t>(s.size()));
                    auto mem = g.members();
                    for (int r : cone) e.set(mem[r]);
                    witness = " at cone " + set_labels(s, e);
                    break;
                }
            }
            note(ok, "stellar subdivision matches blowup, G=" + set_labels(s, g.carrier) +
                         witness);
        }
        for (const auto& g : chosen)
            for (const auto& h : chosen) {
                if (g.carrier == h.carrier || !h.carrier.is_subset_of(g.carrier)) continue;
                auto rep = subdivision_sequence(s, g, h, &cache);
                note(rep.all_pass, "subdivision chain " + set_labels(s, g.carrier) +
                                       " over " + set_labels(s, h.carrier) + " (" +
                                       std::to_string(rep.steps.size()) + " steps)");
                auto sup = sample_support_equality(rep.fans.front(), rep.fans.back(),
                                                   opt.trials, opt.seed);
                std::string w;
                if (sup.witness) {
                    w = " witness point (";
                    for (std::size_t i = 0; i < sup.witness->size(); ++i) {
                        if (i) w += ",";
                        w += std::to_string((*sup.witness)[i]);
                    }
                    w += ")";
                }
                note(sup.agree(), "support agreement " + set_labels(s, g.carrier) + " vs " +
                                      set_labels(s, h.carrier) + " (" +
                                      std::to_string(sup.agreements) + "/" +
                                      std::to_string(sup.trials) + ")" + w);
            }
        for (const auto& g : {chosen.front(), chosen.back()}) {
            auto witness = fan_overlap_witness(cache.fan(s, g));
            note(!witness.has_value(),
                 "pairwise cone intersections, G=" + set_labels(s, g.carrier));
        }
    }

    out["pass"] = all_pass;
    if (opt.as_json) {
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& l : lines) std::cout << l << "\n";
        std::cout << (all_pass ? "all checks passed" : "VERIFICATION FAILED") << "\n";
    }
    return all_pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nestkit: building sets, nested set complexes, combinatorial blowups, "
                 "and simplicial fans over finite meet-semilattices"};
    app.require_subcommand(1);

    std::string poset_path, set_path, g_path, h_path, element, complex_path;
    bool as_json = false;

    auto* validate = app.add_subcommand("validate", "check that a poset is a meet-semilattice");
    validate->add_option("poset", poset_path, "poset JSON file")->required();

    auto* catalog = app.add_subcommand("catalog", "generate a corpus semilattice");
    std::string cat_name;
    std::vector<std::string> cat_params;
    bool cat_remove_top = false;
    catalog->add_option("name", cat_name, "boolean | partition | chain | bond_lattice")
        ->required();
    catalog->add_option("params", cat_params,
                        "size n, or vertex count followed by edges like 1-2");
    catalog->add_flag("--remove-top", cat_remove_top, "remove the unique maximum");

    auto* building = app.add_subcommand("building", "building set operations");
    building->require_subcommand(1);
    auto* bcheck = building->add_subcommand("check", "test a candidate set");
    bcheck->add_option("poset", poset_path)->required();
    bcheck->add_option("set", set_path)->required();
    auto* bmin = building->add_subcommand("min", "minimal building set");
    bmin->add_option("poset", poset_path)->required();
    auto* bmax = building->add_subcommand("max", "maximal building set");
    bmax->add_option("poset", poset_path)->required();
    auto* benum = building->add_subcommand("enumerate", "all building sets (capped)");
    benum->add_option("poset", poset_path)->required();

    auto* nested = app.add_subcommand("nested", "nested set complex of a building set");
    nested->add_option("poset", poset_path)->required();
    nested->add_option("building", set_path)->required();

    auto* blowup_cmd = app.add_subcommand("blowup", "combinatorial blowup at an element");
    blowup_cmd->add_option("poset", poset_path)->required();
    blowup_cmd->add_option("element", element, "element label")->required();

    auto* fan_cmd = app.add_subcommand("fan", "simplicial fan of a nested set complex");
    fan_cmd->add_option("poset", poset_path)->required();
    fan_cmd->add_option("building", set_path)->required();

    auto* chain_cmd =
        app.add_subcommand("chain", "stellar subdivision chain between two building sets");
    chain_cmd->add_option("poset", poset_path)->required();
    chain_cmd->add_option("G", g_path, "larger building set JSON")->required();
    chain_cmd->add_option("H", h_path, "smaller building set JSON")->required();
    chain_cmd->add_flag("--json", as_json, "machine-readable report");

    auto* homology_cmd = app.add_subcommand("homology", "reduced integral homology");
    homology_cmd->add_option("complex", complex_path, "complex JSON file")->required();

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "run the verification battery");
    verify->add_option("poset", vopt.poset_path)->required();
    auto* vb = verify->add_option("--building", vopt.building_path, "building set JSON");
    verify->add_flag("--all-building", vopt.all_building, "enumerate all building sets")
        ->excludes(vb);
    verify->add_flag("--slow", vopt.slow, "include slow checks");
    verify->add_option("--seed", vopt.seed, "sampling seed");
    verify->add_option("--trials", vopt.trials, "support sample count");
    verify->add_flag("--json", vopt.as_json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate) return cmd_validate(poset_path);

        if (*catalog) {
            Semilattice s = [&]() -> Semilattice {
                if (cat_name == "boolean" || cat_name == "partition" || cat_name == "chain") {
                    if (cat_params.size() != 1)
                        throw error(cat_name + " takes exactly one size parameter");
                    int n = std::stoi(cat_params[0]);
                    if (cat_name == "boolean") return boolean_lattice(n);
                    if (cat_name == "partition") return partition_lattice(n);
                    return chain_lattice(n);
                }
                if (cat_name == "bond_lattice") {
                    if (cat_params.empty()) throw error("bond_lattice needs a vertex count");
                    int nv = std::stoi(cat_params[0]);
                    std::vector<std::pair<int, int>> edges;
                    for (std::size_t i = 1; i < cat_params.size(); ++i) {
                        auto dash = cat_params[i].find('-');
                        if (dash == std::string::npos) throw error("edges look like 1-2");
                        edges.emplace_back(std::stoi(cat_params[i].substr(0, dash)),
                                           std::stoi(cat_params[i].substr(dash + 1)));
                    }
                    return bond_lattice(nv, edges);
                }
                throw error("unknown catalog name '" + cat_name + "'");
            }();
            if (cat_remove_top) s = remove_top(s);
            std::cout << poset_to_json(s.poset()).dump(2) << "\n";
            return kExitOk;
        }

        if (*bcheck) {
            Semilattice s = load_semilattice(poset_path);
            ElementSet carrier = element_set_from_json(s, load_json_file(set_path));
            std::string diag;
            auto g = is_building(s, carrier, &diag);
            if (!g) {
                std::cout << "not a building set: " << diag << "\n";
                return kExitVerificationFailed;
            }
            std::cout << "building set with " << g->carrier.count() << " members\n";
            return kExitOk;
        }
        if (*bmin || *bmax) {
            Semilattice s = load_semilattice(poset_path);
            BuildingSet g = *bmin ? min_building(s) : max_building(s);
            std::cout << building_to_json(s, g).dump() << "\n";
            return kExitOk;
        }
        if (*benum) {
            Semilattice s = load_semilattice(poset_path);
            json out = json::array();
            for (const auto& g : enumerate_building_sets(s))
                out.push_back(building_to_json(s, g));
            std::cout << out.dump(2) << "\n";
            return kExitOk;
        }

        if (*nested) {
            Semilattice s = load_semilattice(poset_path);
            BuildingSet g = load_building(s, set_path);
            std::cout << complex_to_json(nested_complex(s, g)).dump(2) << "\n";
            return kExitOk;
        }

        if (*blowup_cmd) {
            Semilattice s = load_semilattice(poset_path);
            int x = s.index_of(element);
            if (x < 0) throw error("unknown element label '" + element + "'");
            BlowupResult r = blowup(s, x);
            std::cout << poset_to_json(r.lattice.poset()).dump(2) << "\n";
            return kExitOk;
        }

        if (*fan_cmd) {
            Semilattice s = load_semilattice(poset_path);
            BuildingSet g = load_building(s, set_path);
            std::cout << fan_to_json(fan_from_nested(s, g)).dump(2) << "\n";
            return kExitOk;
        }

        if (*chain_cmd) {
            Semilattice s = load_semilattice(poset_path);
            BuildingSet g = load_building(s, g_path);
            BuildingSet h = load_building(s, h_path);
            auto rep = subdivision_sequence(s, g, h);
            if (as_json) {
                json out;
                out["chain"] = json::array();
                for (const auto& bs : rep.chain)
                    out["chain"].push_back(building_to_json(s, bs));
                out["steps"] = json::array();
                for (const auto& st : rep.steps) {
                    json j;
                    j["added"] = s.label(st.added_element);
                    j["sigma"] = st.sigma;
                    j["factor_sum"] = st.factor_sum;
                    j["fan_equality"] = st.fan_equality;
                    j["blowup_equality"] = st.blowup_equality;
                    out["steps"].push_back(j);
                }
                out["pass"] = rep.all_pass;
                std::cout << out.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < rep.steps.size(); ++i) {
                    const auto& st = rep.steps[i];
                    std::cout << "step " << (i + 1) << ": add '" << s.label(st.added_element)
                              << "'  factor-sum " << (st.factor_sum ? "ok" : "FAIL")
                              << "  fan equality " << (st.fan_equality ? "ok" : "FAIL")
                              << "  blowup equality " << (st.blowup_equality ? "ok" : "FAIL")
                              << "\n";
                }
                std::cout << (rep.all_pass ? "chain verified" : "CHAIN FAILED") << " ("
                          << rep.chain.size() << " building sets)\n";
            }
            return rep.all_pass ? kExitOk : kExitVerificationFailed;
        }

        if (*homology_cmd) {
            SimplicialComplex c = complex_from_json(load_json_file(complex_path));
            std::cout << homology_to_json(reduced_homology(c)).dump(2) << "\n";
            return kExitOk;
        }

        if (*verify) return cmd_verify(vopt);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
