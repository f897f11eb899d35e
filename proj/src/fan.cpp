#include "nestkit/fan.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace nestkit {

namespace {

std::string cone_label(const std::vector<int>& c) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << "}";
    return os.str();
}

}  // namespace

bool Fan::has_cone(const std::vector<int>& c) const {
    return std::binary_search(cones.begin(), cones.end(), c, face_less);
}

int Fan::ray_index(const RayVector& v) const {
    for (int i = 0; i < static_cast<int>(rays.size()); ++i)
        if (rays[i] == v) return i;
    return -1;
}

std::vector<std::vector<int>> Fan::maximal_cones() const {
    std::vector<std::vector<int>> out;
    for (const auto& c : cones) {
        bool maximal = true;
        for (const auto& d : cones) {
            if (d.size() <= c.size()) continue;
            if (std::includes(d.begin(), d.end(), c.begin(), c.end())) {
                maximal = false;
                break;
            }
        }
        if (maximal) out.push_back(c);
    }
    if (out.size() > 1)
        out.erase(std::remove(out.begin(), out.end(), std::vector<int>{}), out.end());
    return out;
}

Fan Fan::from_cones(int ambient_dim, std::vector<RayVector> rays,
                    std::vector<std::vector<int>> cones, std::vector<std::string> ray_labels) {
    Fan f;
    f.ambient_dim = ambient_dim;
    f.rays = std::move(rays);
    for (auto& r : f.rays) {
        if (static_cast<int>(r.size()) != ambient_dim) throw error("ray dimension mismatch");
        r = primitive_vector(std::move(r));
    }
    for (int i = 0; i < static_cast<int>(f.rays.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(f.rays.size()); ++j)
            if (f.rays[i] == f.rays[j]) throw error("duplicate ray");
    std::set<std::vector<int>> closed;
    closed.insert(std::vector<int>{});
    for (auto& c : cones) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        for (int r : c)
            if (r < 0 || r >= static_cast<int>(f.rays.size()))
                throw error("cone references unknown ray");
        // close under subsets
        const std::size_t k = c.size();
        if (k > 20) throw error("cone too large");
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> s;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) s.push_back(c[b]);
            closed.insert(std::move(s));
        }
    }
    f.cones.assign(closed.begin(), closed.end());
    std::sort(f.cones.begin(), f.cones.end(), face_less);
    for (const auto& c : f.cones) {
        std::vector<std::vector<long long>> mat;
        for (int r : c) mat.push_back(f.rays[r]);
        if (rational_rank(mat) != static_cast<int>(c.size()))
            throw error("cone " + cone_label(c) + " is not simplicial");
    }
    f.ray_labels = std::move(ray_labels);
    if (!f.ray_labels.empty() && f.ray_labels.size() != f.rays.size())
        throw error("ray label count mismatch");
    return f;
}

bool fan_equal(const Fan& a, const Fan& b) {
    if (a.ambient_dim != b.ambient_dim) return false;
    if (a.rays.size() != b.rays.size() || a.cones.size() != b.cones.size()) return false;
    std::vector<int> map(a.rays.size());
    for (std::size_t i = 0; i < a.rays.size(); ++i) {
        int j = b.ray_index(a.rays[i]);
        if (j < 0) return false;
        map[i] = j;
    }
    std::vector<std::vector<int>> remapped;
    remapped.reserve(a.cones.size());
    for (const auto& c : a.cones) {
        std::vector<int> d;
        d.reserve(c.size());
        for (int r : c) d.push_back(map[r]);
        std::sort(d.begin(), d.end());
        remapped.push_back(std::move(d));
    }
    std::sort(remapped.begin(), remapped.end(), face_less);
    return remapped == b.cones;
}

RayVector char_vector(const Semilattice& s, int x) {
    if (!s.is_atomic()) throw error("characteristic vectors require an atomic semilattice");
    if (x == s.bottom()) throw error("characteristic vector of the bottom element");
    const auto& atoms = s.atoms();
    RayVector v(atoms.size(), 0);
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (s.leq(atoms[i], x)) v[i] = 1;
    return v;
}

Fan fan_from_nested(const Semilattice& s, const BuildingSet& g) {
    if (!s.is_atomic()) throw error("fan realization requires an atomic semilattice");
    const std::vector<int> verts = carrier_elements(g.carrier);
    const int n = static_cast<int>(s.atoms().size());
    std::vector<RayVector> rays;
    std::vector<std::string> labels;
    for (int e : verts) {
        rays.push_back(char_vector(s, e));
        labels.push_back(s.label(e));
    }
    SimplicialComplex nc = nested_complex(s, g);
    // vertex v of the complex is verts[v], which is ray v
    std::vector<std::vector<int>> cones = nc.faces();
    // simpliciality: exact rank on the facets covers all faces
    for (const auto& c : nc.facets()) {
        std::vector<std::vector<long long>> mat;
        for (int r : c) mat.push_back(rays[r]);
        if (rational_rank(mat) != static_cast<int>(c.size()))
            throw error("nested set " + cone_label(c) + " has dependent characteristic vectors");
    }
    Fan f;
    f.ambient_dim = n;
    f.rays = std::move(rays);
    f.cones = std::move(cones);
    f.ray_labels = std::move(labels);
    return f;
}

Fan stellar_subdivide(const Fan& f, const std::vector<int>& sigma_in, const RayVector& v_in) {
    std::vector<int> sigma(sigma_in);
    std::sort(sigma.begin(), sigma.end());
    if (!f.has_cone(sigma)) throw error("subdivision cone not in the fan");
    if (sigma.empty()) throw error("cannot subdivide the zero cone");
    {
        std::vector<std::vector<long long>> mat;
        for (int r : sigma) mat.push_back(f.rays[r]);
        if (!cone_contains(mat, v_in, /*strict=*/true))
            throw error("new ray is not in the relative interior of the cone");
    }
    RayVector v = primitive_vector(v_in);
    int v_idx = f.ray_index(v);
    Fan out;
    out.ambient_dim = f.ambient_dim;
    out.rays = f.rays;
    out.ray_labels = f.ray_labels;
    if (v_idx < 0) {
        v_idx = static_cast<int>(out.rays.size());
        out.rays.push_back(v);
        if (!out.ray_labels.empty()) out.ray_labels.push_back(cone_label(sigma) + "*");
    } else if (sigma.size() != 1 || sigma[0] != v_idx) {
        throw error("new ray already generates a different cone of the fan");
    }

    std::set<std::vector<int>> cones;
    for (const auto& c : f.cones) {
        if (!std::includes(c.begin(), c.end(), sigma.begin(), sigma.end())) {
            cones.insert(c);
            continue;
        }
        // faces of c not containing sigma, each joined with v
        const std::size_t k = c.size();
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> rho;
            for (std::size_t b = 0; b < k; ++b)
                if (mask & (1u << b)) rho.push_back(c[b]);
            if (std::includes(rho.begin(), rho.end(), sigma.begin(), sigma.end())) continue;
            rho.insert(std::lower_bound(rho.begin(), rho.end(), v_idx), v_idx);
            rho.erase(std::unique(rho.begin(), rho.end()), rho.end());
            cones.insert(std::move(rho));
        }
    }
    out.cones.assign(cones.begin(), cones.end());
    std::sort(out.cones.begin(), out.cones.end(), face_less);
    return out;
}

int FanFacePoset::element_of(const std::vector<int>& cone) const {
    auto it = std::lower_bound(cones.begin(), cones.end(), cone, face_less);
    if (it == cones.end() || *it != cone) return -1;
    return static_cast<int>(it - cones.begin());
}

FanFacePoset face_poset(const Fan& f) {
    const int m = static_cast<int>(f.cones.size());
    std::vector<std::string> labels(m);
    std::vector<ElementSet> up(m, ElementSet(m));
    for (int i = 0; i < m; ++i) {
        labels[i] = cone_label(f.cones[i]);
        for (int j = 0; j < m; ++j)
            if (std::includes(f.cones[j].begin(), f.cones[j].end(), f.cones[i].begin(),
                              f.cones[i].end()))
                up[i].set(j);
    }
    FanFacePoset out;
    out.lattice = Semilattice::validate(Poset::from_relation(std::move(labels), up));
    out.cones = f.cones;
    return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> fan_overlap_witness(const Fan& f) {
    const int m = static_cast<int>(f.cones.size());
    for (int i = 0; i < m; ++i) {
        if (f.cones[i].empty()) continue;
        for (int j = i + 1; j < m; ++j) {
            if (f.cones[j].empty()) continue;
            // relint(C_i) ∩ relint(C_j) nonempty <=> A λ - B μ = 0 with λ,μ >= 1
            // substitute λ = 1 + λ', μ = 1 + μ'
            const auto &ci = f.cones[i], &cj = f.cones[j];
            const int n = f.ambient_dim;
            std::vector<std::vector<Rat>> A(n, std::vector<Rat>(ci.size() + cj.size()));
            std::vector<Rat> b(n);
            for (int row = 0; row < n; ++row) {
                Rat rhs = 0;
                for (std::size_t c = 0; c < ci.size(); ++c) {
                    A[row][c] = f.rays[ci[c]][row];
                    rhs -= f.rays[ci[c]][row];
                }
                for (std::size_t c = 0; c < cj.size(); ++c) {
                    A[row][ci.size() + c] = -Rat(f.rays[cj[c]][row]);
                    rhs += f.rays[cj[c]][row];
                }
                b[row] = rhs;
            }
            if (lp_feasible_eq_nonneg(std::move(A), std::move(b)))
                return std::make_pair(f.cones[i], f.cones[j]);
        }
    }
    return std::nullopt;
}

std::vector<BuildingSet> building_chain(const Semilattice& s, const BuildingSet& g,
                                        const BuildingSet& h) {
    if (!h.carrier.is_subset_of(g.carrier))
        throw error("chain requires the second building set inside the first");
    std::vector<BuildingSet> chain;
    chain.push_back(g);
    while (chain.back().carrier != h.carrier) {
        ElementSet diff = chain.back().carrier - h.carrier;
        ElementSet minimals = s.poset().min_of(diff);
        int pick = -1;
        for (auto i = minimals.find_first(); i != ElementSet::npos; i = minimals.find_next(i)) {
            if (pick == -1 || s.label(static_cast<int>(i)) < s.label(pick))
                pick = static_cast<int>(i);
        }
        ElementSet next = chain.back().carrier;
        next.reset(pick);
        std::string diag;
        auto bs = is_building(s, next, &diag);
        if (!bs)
            throw error("removing '" + s.label(pick) +
                        "' does not leave a building set: " + diag);
        chain.push_back(std::move(*bs));
    }
    return chain;
}

bool factor_sum_check(const Semilattice& s, const BuildingSet& g, int element,
                      const BuildingSet& h) {
    if (!g.carrier.test(element)) throw error("element not in the first building set");
    RayVector v = char_vector(s, element);
    ElementSet fs = factors(s, h, element);
    RayVector sum(v.size(), 0);
    for (auto f = fs.find_first(); f != ElementSet::npos; f = fs.find_next(f)) {
        RayVector vf = char_vector(s, static_cast<int>(f));
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] += vf[i];
            if (sum[i] > 1) return false;  // overlapping supports
        }
    }
    return sum == v;
}

bool verify_blowup_duality(const FanFacePoset& before, int sigma_element,
                           const FanFacePoset& after, const std::vector<int>& ray_map,
                           int new_ray) {
    BlowupPoset bl = blowup_poset(before.lattice, sigma_element);
    const int m = static_cast<int>(bl.elements.size());
    if (m != static_cast<int>(after.cones.size())) return false;
    std::vector<int> image(m, -1);
    std::vector<bool> hit(m, false);
    for (int e = 0; e < m; ++e) {
        std::vector<int> cone;
        for (int r : before.cones[bl.elements[e].origin]) cone.push_back(ray_map.at(r));
        if (bl.elements[e].hatted) cone.push_back(new_ray);
        std::sort(cone.begin(), cone.end());
        cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
        int t = after.element_of(cone);
        if (t < 0 || hit[t]) return false;
        image[e] = t;
        hit[t] = true;
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (bl.poset.leq(a, b) != after.lattice.leq(image[a], image[b])) return false;
    return true;
}

const BuildingSet& RealizationCache::building(const Semilattice& s, const ElementSet& carrier) {
    auto key = carrier_elements(carrier);
    auto it = buildings_.find(key);
    if (it != buildings_.end()) return it->second;
    std::string diag;
    auto bs = is_building(s, carrier, &diag);
    if (!bs) throw error("cached carrier is not a building set: " + diag);
    return buildings_.emplace(std::move(key), std::move(*bs)).first->second;
}

const Fan& RealizationCache::fan(const Semilattice& s, const BuildingSet& g) {
    auto key = g.members();
    auto it = fans_.find(key);
    if (it != fans_.end()) return it->second;
    return fans_.emplace(std::move(key), fan_from_nested(s, g)).first->second;
}

const FanFacePoset& RealizationCache::fp(const Semilattice& s, const BuildingSet& g) {
    auto key = g.members();
    auto it = fps_.find(key);
    if (it != fps_.end()) return it->second;
    return fps_.emplace(std::move(key), face_poset(fan(s, g))).first->second;
}

SubdivisionReport subdivision_sequence(const Semilattice& s, const BuildingSet& g,
                                       const BuildingSet& h, RealizationCache* cache) {
    SubdivisionReport rep;
    if (!h.carrier.is_subset_of(g.carrier))
        throw error("chain requires the second building set inside the first");
    if (cache) {
        // same walk as building_chain, through the cache
        rep.chain.push_back(cache->building(s, g.carrier));
        while (rep.chain.back().carrier != h.carrier) {
            ElementSet diff = rep.chain.back().carrier - h.carrier;
            ElementSet minimals = s.poset().min_of(diff);
            int pick = -1;
            for (auto i = minimals.find_first(); i != ElementSet::npos;
                 i = minimals.find_next(i))
                if (pick == -1 || s.label(static_cast<int>(i)) < s.label(pick))
                    pick = static_cast<int>(i);
            ElementSet next = rep.chain.back().carrier;
            next.reset(pick);
            rep.chain.push_back(cache->building(s, next));
        }
    } else {
        rep.chain = building_chain(s, g, h);
    }
    const int t = static_cast<int>(rep.chain.size());
    rep.fans.resize(t);
    std::vector<const FanFacePoset*> fps(t, nullptr);
    std::vector<FanFacePoset> owned;
    owned.reserve(t);
    for (int i = 0; i < t; ++i) {
        rep.fans[i] = cache ? cache->fan(s, rep.chain[i]) : fan_from_nested(s, rep.chain[i]);
    }
    for (int i = 0; i < t; ++i) {
        if (cache) {
            fps[i] = &cache->fp(s, rep.chain[i]);
        } else {
            owned.push_back(face_poset(rep.fans[i]));
            fps[i] = &owned.back();
        }
    }
    rep.steps.resize(t - 1);
    for (int i = t - 2; i >= 0; --i) {
        const BuildingSet& fine = rep.chain[i];
        const BuildingSet& coarse = rep.chain[i + 1];
        ElementSet added = fine.carrier - coarse.carrier;
        const int G = static_cast<int>(added.find_first());
        SubdivisionStep& step = rep.steps[i];
        step.added_element = G;
        step.factor_sum = factor_sum_check(s, fine, G, coarse);

        // sigma = V(F_coarse(G)) as ray indices of the coarse fan
        const std::vector<int> coarse_elems = carrier_elements(coarse.carrier);
        ElementSet fs = factors(s, coarse, G);
        for (auto f = fs.find_first(); f != ElementSet::npos; f = fs.find_next(f)) {
            auto it = std::lower_bound(coarse_elems.begin(), coarse_elems.end(),
                                       static_cast<int>(f));
            step.sigma.push_back(static_cast<int>(it - coarse_elems.begin()));
        }
        Fan subdivided = stellar_subdivide(rep.fans[i + 1], step.sigma, char_vector(s, G));
        step.fan_equality = fan_equal(subdivided, rep.fans[i]);

        const FanFacePoset& fp_coarse = *fps[i + 1];
        const FanFacePoset& fp_fine = *fps[i];
        int sigma_elem = fp_coarse.element_of(step.sigma);
        // rays of the coarse fan inside the fine fan
        std::vector<int> ray_map;
        bool rays_ok = true;
        for (const auto& r : rep.fans[i + 1].rays) {
            int idx = rep.fans[i].ray_index(r);
            if (idx < 0) {
                rays_ok = false;
                break;
            }
            ray_map.push_back(idx);
        }
        if (rays_ok) {
            int new_ray = rep.fans[i].ray_index(char_vector(s, G));
            step.blowup_equality = sigma_elem >= 0 && new_ray >= 0 &&
                                   verify_blowup_duality(fp_coarse, sigma_elem, fp_fine,
                                                         ray_map, new_ray);
        }
        if (!step.pass()) rep.all_pass = false;
    }
    return rep;
}

std::vector<RayVector> sample_points(int dim, long long trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<RayVector> pts;
    pts.reserve(static_cast<std::size_t>(trials));
    for (long long t = 0; t < trials; ++t) {
        RayVector p(dim);
        for (int i = 0; i < dim; ++i)
            p[i] = static_cast<long long>(rng() % 19) - 9;
        pts.push_back(std::move(p));
    }
    return pts;
}

namespace {

struct MembershipTester {
    const Fan& f;
    std::vector<std::vector<int>> maximal;
    std::vector<std::vector<std::vector<long long>>> mats;
    bool nonneg_rays = true;

    explicit MembershipTester(const Fan& fan) : f(fan), maximal(fan.maximal_cones()) {
        for (const auto& c : maximal) {
            std::vector<std::vector<long long>> mat;
            for (int r : c) mat.push_back(f.rays[r]);
            mats.push_back(std::move(mat));
        }
        for (const auto& r : f.rays)
            for (long long v : r)
                if (v < 0) nonneg_rays = false;
    }

    bool contains(const RayVector& p) const {
        bool all_zero = std::all_of(p.begin(), p.end(), [](long long c) { return c == 0; });
        if (all_zero) return true;  // the zero cone
        if (nonneg_rays) {
            for (long long c : p)
                if (c < 0) return false;
        }
        for (const auto& mat : mats)
            if (cone_contains(mat, p, /*strict=*/false)) return true;
        return false;
    }
};

}  // namespace

bool fan_contains(const Fan& f, const RayVector& point) {
    if (static_cast<int>(point.size()) != f.ambient_dim) throw error("point dimension mismatch");
    return MembershipTester(f).contains(point);
}

SupportSampleReport sample_support_equality(const Fan& a, const Fan& b, long long trials,
                                            std::uint64_t seed) {
    if (a.ambient_dim != b.ambient_dim) throw error("ambient dimension mismatch");
    SupportSampleReport rep;
    rep.seed = seed;
    rep.trials = trials;
    MembershipTester ta(a), tb(b);
    auto pts = sample_points(a.ambient_dim, trials, seed);
    for (const auto& p : pts) {
        if (ta.contains(p) == tb.contains(p)) {
            ++rep.agreements;
        } else if (!rep.witness) {
            rep.witness = p;
        }
    }
    return rep;
}

}  // namespace nestkit
