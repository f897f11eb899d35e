// Simplicial fans from nested set complexes, stellar subdivision, and the
// building-set subdivision chains connecting two fans.
#pragma once

#include "nestkit/blowup.hpp"
#include "nestkit/building.hpp"
#include "nestkit/exact_linalg.hpp"
#include "nestkit/poset.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nestkit {

using RayVector = std::vector<long long>;

// Rays are primitive and pairwise distinct; cones are sorted ray-index sets,
// face-closed (the zero cone {} always present), in canonical (size, lex) order.
struct Fan {
    int ambient_dim = 0;
    std::vector<RayVector> rays;
    std::vector<std::vector<int>> cones;
    std::vector<std::string> ray_labels;  // empty when unlabeled

    bool has_cone(const std::vector<int>& c) const;
    int ray_index(const RayVector& v) const;  // -1 if absent
    std::vector<std::vector<int>> maximal_cones() const;

    static Fan from_cones(int ambient_dim, std::vector<RayVector> rays,
                          std::vector<std::vector<int>> cones,
                          std::vector<std::string> ray_labels = {});
};

// Equal primitive ray sets and equal cone sets after matching rays.
bool fan_equal(const Fan& a, const Fan& b);

// 0/1 vector over the atoms, supported on atoms below x. Requires an atomic
// semilattice and x != bottom.
RayVector char_vector(const Semilattice& s, int x);

// Rays = characteristic vectors of the carrier; cones = nested sets. Linear
// independence inside every nested set is checked exactly.
Fan fan_from_nested(const Semilattice& s, const BuildingSet& g);

// Standard stellar subdivision at cone sigma with new ray v; v must lie in the
// relative interior of V(sigma) (exact rational check). Subdividing a ray at
// its own generator is a no-op (rays are primitive).
Fan stellar_subdivide(const Fan& f, const std::vector<int>& sigma, const RayVector& v);

struct FanFacePoset {
    Semilattice lattice;                  // element i <-> cones[i]; bottom = {}
    std::vector<std::vector<int>> cones;  // mirror of the fan's cone list
    int element_of(const std::vector<int>& cone) const;
};

// Cones ordered by face inclusion, validated as a meet-semilattice.
FanFacePoset face_poset(const Fan& f);

// Geometric fan check: distinct cones have disjoint relative interiors
// (exact LP); with face-closedness this makes every pairwise intersection a
// common face. Returns the first offending cone pair, if any.
std::optional<std::pair<std::vector<int>, std::vector<int>>> fan_overlap_witness(const Fan& f);

// G = chain[0] ⊇ ... ⊇ chain.back() = H, dropping one element per step, the
// dropped element minimal in G_i \ H (ties: least label). Every intermediate
// is re-checked; a failure throws.
std::vector<BuildingSet> building_chain(const Semilattice& s, const BuildingSet& g,
                                        const BuildingSet& h);

// v_G == sum of v_F over F in F_h(G) (certifies v_G interior to V(F_h(G))).
bool factor_sum_check(const Semilattice& s, const BuildingSet& g, int element,
                      const BuildingSet& h);

struct SubdivisionStep {
    int added_element;            // the element re-inserted at this step
    std::vector<int> sigma;       // subdivided cone, ray indices in the coarser fan
    bool factor_sum = false;      // v of the element equals the factor vector sum
    bool fan_equality = false;    // st(Sigma(H), V(F_H(G)), v_G) == Sigma(G) exactly
    bool blowup_equality = false; // face poset of the finer fan == blowup of coarser
    bool pass() const { return factor_sum && fan_equality && blowup_equality; }
};

struct SubdivisionReport {
    std::vector<BuildingSet> chain;  // g down to h
    std::vector<Fan> fans;           // fans[i] realizes chain[i]
    std::vector<SubdivisionStep> steps;  // steps[i] refines fans[i+1] into fans[i]
    bool all_pass = true;
};

// Memoizes building sets, fans, and face posets by carrier so that chain
// verifications over many overlapping pairs do not recompute them.
class RealizationCache {
public:
    const BuildingSet& building(const Semilattice& s, const ElementSet& carrier);
    const Fan& fan(const Semilattice& s, const BuildingSet& g);
    const FanFacePoset& fp(const Semilattice& s, const BuildingSet& g);

private:
    std::map<std::vector<int>, BuildingSet> buildings_;
    std::map<std::vector<int>, Fan> fans_;
    std::map<std::vector<int>, FanFacePoset> fps_;
};

// Walks the chain from h back up to g, one stellar subdivision per step,
// verifying the exact fan equality and the face-poset/blowup identification.
SubdivisionReport subdivision_sequence(const Semilattice& s, const BuildingSet& g,
                                       const BuildingSet& h,
                                       RealizationCache* cache = nullptr);

// Explicit certified isomorphism between Bl_sigma(before) and after:
// plain cone c maps through ray_map, hatted c gains the new ray.
bool verify_blowup_duality(const FanFacePoset& before, int sigma_element,
                           const FanFacePoset& after, const std::vector<int>& ray_map,
                           int new_ray);

struct SupportSampleReport {
    std::uint64_t seed = 0;
    long long trials = 0;
    long long agreements = 0;
    std::optional<RayVector> witness;  // first disagreement point
    bool agree() const { return !witness.has_value(); }
};

// Membership agreement of seeded pseudo-random integer points in the two
// supports; exact rational membership per simplicial cone.
SupportSampleReport sample_support_equality(const Fan& a, const Fan& b, long long trials,
                                            std::uint64_t seed);

// Deterministic sample points used by sample_support_equality.
std::vector<RayVector> sample_points(int dim, long long trials, std::uint64_t seed);

// point ∈ |f|: membership in some maximal cone.
bool fan_contains(const Fan& f, const RayVector& point);

}  // namespace nestkit
