#include "nestkit/catalog.hpp"
#include "nestkit/exact_linalg.hpp"
#include "nestkit/homology.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace nestkit;

namespace {

std::vector<Int> sparse_smith(const std::vector<std::vector<Int>>& dense) {
    SparseIntMatrix m(static_cast<int>(dense.size()),
                      dense.empty() ? 0 : static_cast<int>(dense[0].size()));
    for (int i = 0; i < static_cast<int>(dense.size()); ++i)
        for (int j = 0; j < static_cast<int>(dense[i].size()); ++j)
            if (dense[i][j] != 0) m.set(i, j, dense[i][j]);
    return std::move(m).invariant_factors();
}

}  // namespace

TEST_CASE("smith normal form on known matrices") {
    // diag(2,6) ~ invariant factors (2,6); antidiagonal-ish cases
    CHECK(sparse_smith({{2, 0}, {0, 6}}) == std::vector<Int>{2, 6});
    CHECK(sparse_smith({{6, 0}, {0, 2}}) == std::vector<Int>{2, 6});
    CHECK(sparse_smith({{0, 0}, {0, 0}}).empty());
    // gcd 2, |det| 8 -> invariant factors (2, 4)
    CHECK(sparse_smith({{2, 4}, {6, 8}}) == std::vector<Int>{2, 4});
}

TEST_CASE("smith agrees with the elementary-operations oracle") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8);
        int cols = 1 + static_cast<int>(rng() % 8);
        std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols));
        for (auto& row : m)
            for (auto& v : row) v = static_cast<long long>(rng() % 11) - 5;
        auto mine = sparse_smith(m);
        auto ref = oracles::naive_smith(m);
        CHECK(mine == ref);
        // rank over Q matches fraction-free elimination
        std::vector<std::vector<long long>> ll(rows, std::vector<long long>(cols));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) ll[i][j] = static_cast<long long>(m[i][j]);
        CHECK(static_cast<int>(mine.size()) == rational_rank(ll));
    }
}

TEST_CASE("reduced homology of standard complexes") {
    auto full = SimplicialComplex::from_faces({"a", "b", "c"}, {{0, 1, 2}});
    CHECK(reduced_homology(full).all_trivial());

    auto hollow = SimplicialComplex::from_faces({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    auto h = reduced_homology(hollow);
    CHECK(h.at(0).rank == 0);
    CHECK(h.at(1).rank == 1);
    CHECK(h.at(1).torsion.empty());

    // two isolated points: H~0 = Z
    auto pts = SimplicialComplex::from_faces({"a", "b"}, {{0}, {1}});
    CHECK(reduced_homology(pts).at(0).rank == 1);

    // empty complex (only the empty face)
    auto empty = SimplicialComplex::from_faces({}, {});
    CHECK(reduced_homology(empty).groups.empty());

    // hollow tetrahedron: a 2-sphere
    auto sphere = SimplicialComplex::from_faces(
        {"a", "b", "c", "d"}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto hs = reduced_homology(sphere);
    CHECK(hs.at(1).rank == 0);
    CHECK(hs.at(2).rank == 1);
}

TEST_CASE("torsion: real projective plane") {
    // 6-vertex triangulation of RP^2 (every edge in exactly two triangles)
    auto rp2 = SimplicialComplex::from_faces(
        {"1", "2", "3", "4", "5", "6"},
        {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
         {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
    auto h = reduced_homology(rp2);
    CHECK(h.at(0).rank == 0);
    CHECK(h.at(1).rank == 0);
    CHECK(h.at(1).torsion == std::vector<Int>{2});
    CHECK(h.at(2).rank == 0);
    CHECK(h == oracles::naive_reduced_homology(rp2));
}

TEST_CASE("partition lattice order complex homology") {
    // proper part of partition(4): wedge of 6 circles
    Semilattice p4 = partition_lattice(4);
    ElementSet proper = p4.poset().all();
    proper.reset(p4.bottom());
    proper.reset(*p4.poset().unique_maximum());
    auto oc = order_complex(p4.poset().induced(proper));
    auto h = reduced_homology(oc);
    CHECK(h.at(0).rank == 0);
    CHECK(h.at(1).rank == 6);
    CHECK(h.at(1).torsion.empty());
    CHECK(h == oracles::naive_reduced_homology(oc));
    // euler characteristic consistency: 1 + sum (-1)^d rank_d
    CHECK(euler_characteristic(oc) == 1 - 6);
}
