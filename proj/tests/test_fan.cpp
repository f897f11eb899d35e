#include "nestkit/catalog.hpp"
#include "nestkit/fan.hpp"
#include "nestkit/topology.hpp"

#include <doctest.h>

using namespace nestkit;

namespace {

Semilattice b2() {
    return Semilattice::validate(Poset::from_covers(
        {"0", "a", "b", "ab"}, {{"0", "a"}, {"0", "b"}, {"a", "ab"}, {"b", "ab"}}));
}

ElementSet by_labels(const Semilattice& s, std::initializer_list<const char*> labels) {
    ElementSet out(static_cast<std::size_t>(s.size()));
    for (const char* l : labels) out.set(s.index_of(l));
    return out;
}

Fan quadrant() {
    return Fan::from_cones(2, {{1, 0}, {0, 1}}, {{0, 1}});
}

}  // namespace

TEST_CASE("char_vector") {
    Semilattice s = b2();
    CHECK(char_vector(s, s.index_of("a")) == RayVector{1, 0});
    CHECK(char_vector(s, s.index_of("b")) == RayVector{0, 1});
    CHECK(char_vector(s, s.index_of("ab")) == RayVector{1, 1});
    CHECK_THROWS_AS(char_vector(s, s.bottom()), error);

    Semilattice p3 = partition_lattice(3);
    CHECK(char_vector(p3, *p3.poset().unique_maximum()) == RayVector{1, 1, 1});
    for (int a : p3.atoms()) {
        RayVector v = char_vector(p3, a);
        long long sum = 0;
        for (long long c : v) sum += c;
        CHECK(sum == 1);  // unit vector
    }

    CHECK_THROWS_AS(char_vector(chain_lattice(3), 2), error);  // not atomic
}

TEST_CASE("fan_from_nested") {
    Semilattice s = b2();
    auto gmin = is_building(s, by_labels(s, {"a", "b"}));
    Fan fmin = fan_from_nested(s, *gmin);
    CHECK(fmin.ambient_dim == 2);
    CHECK(fmin.rays.size() == 2);
    CHECK(fmin.cones.size() == 4);  // {}, two rays, quadrant
    CHECK(fan_equal(fmin, quadrant()));

    Fan fmax = fan_from_nested(s, max_building(s));
    CHECK(fmax.rays.size() == 3);
    CHECK(fmax.ray_index({1, 1}) >= 0);
    auto maxcones = fmax.maximal_cones();
    CHECK(maxcones.size() == 2);

    Semilattice p3 = partition_lattice(3);
    Fan f3 = fan_from_nested(p3, min_building(p3));
    CHECK(f3.ambient_dim == 3);
    CHECK(f3.rays.size() == 4);
    CHECK(f3.maximal_cones().size() == 3);  // each unit vector with (1,1,1)

    CHECK_THROWS_AS(fan_from_nested(chain_lattice(3), max_building(chain_lattice(3))), error);
}

TEST_CASE("nested sets have independent characteristic vectors") {
    for (const Semilattice& s : {boolean_lattice(3), boolean_lattice(4),
                                 partition_lattice(4), remove_top(partition_lattice(4))}) {
        for (const auto& g : enumerate_building_sets(s)) {
            Fan f = fan_from_nested(s, g);  // throws on dependence
            for (const auto& c : f.cones) {
                std::vector<std::vector<long long>> mat;
                for (int r : c) mat.push_back(f.rays[r]);
                CHECK(rational_rank(mat) == static_cast<int>(c.size()));
            }
        }
    }
}

TEST_CASE("stellar subdivision of the quadrant") {
    Fan q = quadrant();
    Fan st = stellar_subdivide(q, {0, 1}, {1, 1});
    CHECK(st.rays.size() == 3);
    CHECK(st.maximal_cones().size() == 2);
    Semilattice s = b2();
    // matches the fan of the maximal building set after relabeling
    Fan fmax = fan_from_nested(s, max_building(s));
    CHECK(fan_equal(st, fmax));

    // fan equality ignores ray order
    Fan manual = Fan::from_cones(2, {{1, 1}, {0, 1}, {1, 0}}, {{0, 2}, {0, 1}});
    CHECK(fan_equal(st, manual));
}

TEST_CASE("degenerate ray subdivision is a no-op") {
    Fan q = quadrant();
    Fan st = stellar_subdivide(q, {0}, {2, 0});  // positive multiple of ray 0
    CHECK(fan_equal(st, q));
}

TEST_CASE("stellar subdivision inside the boolean fan") {
    Semilattice b3 = boolean_lattice(3);
    auto atoms = is_building(b3, b3.atom_set());
    Fan f = fan_from_nested(b3, *atoms);  // full positive octant
    Fan st = stellar_subdivide(f, {0, 1}, {1, 1, 0});
    // face-closed: every subset of every cone is a cone
    for (const auto& c : st.cones)
        for (std::size_t k = 0; k < c.size(); ++k) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (i != k) sub.push_back(c[i]);
            CHECK(st.has_cone(sub));
        }
    // the subdivided square face became two triangles; octant split in two
    CHECK(st.maximal_cones().size() == 2);
}

TEST_CASE("stellar subdivision errors") {
    Fan q = quadrant();
    CHECK_THROWS_AS(stellar_subdivide(q, {0, 1}, {1, 0}), error);   // boundary, not relint
    CHECK_THROWS_AS(stellar_subdivide(q, {0, 1}, {1, -1}), error);  // outside
    Fan single = Fan::from_cones(2, {{1, 0}, {0, 1}}, {{0}, {1}});
    CHECK_THROWS_AS(stellar_subdivide(single, {0, 1}, {1, 1}), error);  // cone not in fan
    CHECK_THROWS_AS(stellar_subdivide(q, {}, {1, 1}), error);
}

TEST_CASE("face_poset") {
    Fan q = quadrant();
    FanFacePoset fp = face_poset(q);
    CHECK(fp.lattice.size() == 4);
    CHECK(fp.lattice.bottom() == fp.element_of({}));

    Fan empty = Fan::from_cones(1, {{1}}, {});
    CHECK(face_poset(empty).lattice.size() == 1);

    Semilattice s = b2();
    Fan fmax = fan_from_nested(s, max_building(s));
    FanFacePoset fp2 = face_poset(fmax);
    Semilattice nc_poset = face_semilattice(nested_complex(s, max_building(s)));
    CHECK(is_isomorphic(fp2.lattice.poset(), nc_poset.poset()).has_value());
}

TEST_CASE("face poset of stellar subdivision is the combinatorial blowup") {
    // single 2-cone blown up at the full cone: two 2-cones sharing the new ray
    Fan q = quadrant();
    FanFacePoset before = face_poset(q);
    Fan st = stellar_subdivide(q, {0, 1}, {1, 1});
    FanFacePoset after = face_poset(st);
    int sigma = before.element_of({0, 1});
    REQUIRE(sigma >= 0);
    CHECK(verify_blowup_duality(before, sigma, after, {0, 1}, st.ray_index({1, 1})));
    // the generic isomorphism search agrees
    BlowupResult bl = blowup_face_poset(before.lattice, sigma);
    CHECK(is_isomorphic(bl.lattice.poset(), after.lattice.poset()).has_value());

    // blowup at a ray of the fan consisting of that ray alone
    Fan ray_only = Fan::from_cones(2, {{1, 0}}, {{0}});
    FanFacePoset rb = face_poset(ray_only);
    Fan rst = stellar_subdivide(ray_only, {0}, {1, 0});
    CHECK(fan_equal(rst, ray_only));
    BlowupResult rbl = blowup_face_poset(rb.lattice, rb.element_of({0}));
    CHECK(is_isomorphic(rbl.lattice.poset(), rb.lattice.poset()).has_value());
    CHECK(verify_blowup_duality(rb, rb.element_of({0}), face_poset(rst), {0}, 0));

    // a maximal cone of the B2 max fan
    Semilattice s = b2();
    Fan fmax = fan_from_nested(s, max_building(s));
    FanFacePoset fb = face_poset(fmax);
    for (const auto& cone : fmax.maximal_cones()) {
        RayVector v(fmax.ambient_dim, 0);
        for (int r : cone)
            for (int i = 0; i < fmax.ambient_dim; ++i) v[i] += fmax.rays[r][i];
        Fan sub = stellar_subdivide(fmax, cone, v);
        std::vector<int> ray_map;
        for (int i = 0; i < static_cast<int>(fmax.rays.size()); ++i) ray_map.push_back(i);
        CHECK(verify_blowup_duality(fb, fb.element_of(cone), face_poset(sub), ray_map,
                                    sub.ray_index(primitive_vector(v))));
    }
}

TEST_CASE("building_chain") {
    Semilattice s = b2();
    auto chain = building_chain(s, max_building(s), min_building(s));
    REQUIRE(chain.size() == 2);
    CHECK(chain[0].carrier.count() == 3);
    CHECK(chain[1].carrier == min_building(s).carrier);

    auto self_chain = building_chain(s, min_building(s), min_building(s));
    CHECK(self_chain.size() == 1);

    Semilattice p4 = partition_lattice(4);
    auto p4chain = building_chain(p4, max_building(p4), min_building(p4));
    CHECK(p4chain.size() == 4);

    CHECK_THROWS_AS(building_chain(s, min_building(s), max_building(s)), error);
}

TEST_CASE("factor_sum_check") {
    Semilattice s = b2();
    BuildingSet mx = max_building(s), mn = min_building(s);
    CHECK(factor_sum_check(s, mx, s.index_of("ab"), mn));

    Semilattice p3 = partition_lattice(3);
    BuildingSet m3 = min_building(p3);
    CHECK(factor_sum_check(p3, m3, *p3.poset().unique_maximum(), m3));  // vacuous: G in h

    Semilattice p4 = partition_lattice(4);
    BuildingSet mx4 = max_building(p4), mn4 = min_building(p4);
    CHECK(factor_sum_check(p4, mx4, p4.index_of("12|34"), mn4));
}

TEST_CASE("subdivision_sequence") {
    Semilattice s = b2();
    auto rep = subdivision_sequence(s, max_building(s), min_building(s));
    CHECK(rep.all_pass);
    REQUIRE(rep.steps.size() == 1);
    CHECK(rep.steps[0].fan_equality);
    CHECK(rep.steps[0].blowup_equality);
    CHECK(rep.steps[0].factor_sum);
    CHECK(fan_equal(rep.fans.back(), quadrant()));

    auto trivial = subdivision_sequence(s, min_building(s), min_building(s));
    CHECK(trivial.steps.empty());
    CHECK(trivial.all_pass);

    Semilattice p4 = partition_lattice(4);
    auto rep4 = subdivision_sequence(p4, max_building(p4), min_building(p4));
    CHECK(rep4.all_pass);
    CHECK(rep4.steps.size() == 3);
}

TEST_CASE("sample_support_equality") {
    Semilattice s = b2();
    auto gmin = is_building(s, by_labels(s, {"a", "b"}));
    Fan fmin = fan_from_nested(s, *gmin);
    Fan fmax = fan_from_nested(s, max_building(s));
    auto rep = sample_support_equality(fmin, fmax, 1000, 42);
    CHECK(rep.agree());
    CHECK(rep.agreements == 1000);

    auto self_rep = sample_support_equality(fmax, fmax, 200, 7);
    CHECK(self_rep.agree());

    Fan halfq = Fan::from_cones(2, {{1, 0}, {1, 1}}, {{0, 1}});
    auto bad = sample_support_equality(quadrant(), halfq, 1000, 42);
    CHECK(!bad.agree());
    REQUIRE(bad.witness.has_value());
    // the witness lies in exactly one support
    CHECK(fan_contains(quadrant(), *bad.witness) != fan_contains(halfq, *bad.witness));

    Fan one_dim = Fan::from_cones(1, {{1}}, {{0}});
    CHECK_THROWS_AS(sample_support_equality(quadrant(), one_dim, 10, 1), error);
}

TEST_CASE("fan overlap check") {
    CHECK(!fan_overlap_witness(quadrant()).has_value());
    Semilattice p3 = partition_lattice(3);
    CHECK(!fan_overlap_witness(fan_from_nested(p3, min_building(p3))).has_value());

    // overlapping cones: the quadrant plus a cone crossing into it
    Fan bad = Fan::from_cones(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}}, {{0, 1}, {2, 3}});
    auto witness = fan_overlap_witness(bad);
    REQUIRE(witness.has_value());
}
