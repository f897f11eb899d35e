// Generators for the semilattice corpus used throughout the test suite.
#pragma once

#include "nestkit/poset.hpp"

#include <utility>
#include <vector>

namespace nestkit {

// Subsets of {1..n} by inclusion; bottom labeled "0", others by digit strings.
Semilattice boolean_lattice(int n);  // 1 <= n <= 6

// Partitions of {1..n} by refinement; labels list the nontrivial blocks
// ("12|34"), all-singletons bottom is "0".
Semilattice partition_lattice(int n);  // 2 <= n <= 6

// Linear order on n elements labeled "0".."n-1".
Semilattice chain_lattice(int n);  // n >= 1

// Partitions whose blocks induce connected subgraphs, by refinement.
// Vertices are 1..vertex_count (<= 7); the graph must be simple.
Semilattice bond_lattice(int vertex_count, const std::vector<std::pair<int, int>>& edges);

// Removes the unique maximum; the result is re-validated.
Semilattice remove_top(const Semilattice& s);

}  // namespace nestkit
