// Test-only reference implementations, kept independent of the library's
// computation paths so they can serve as oracles.
#pragma once

#include "nestkit/homology.hpp"
#include "nestkit/simplicial.hpp"

#include <string>
#include <vector>

namespace oracles {

// Textbook Smith normal form: scan-order pivoting, euclidean row/column
// reduction, in-place divisibility repair. Dense, no pivot heuristics.
std::vector<nestkit::Int> naive_smith(std::vector<std::vector<nestkit::Int>> m);

// Reduced homology built on naive_smith with its own boundary assembly.
nestkit::HomologyResult naive_reduced_homology(const nestkit::SimplicialComplex& c);

// Set-partition arithmetic on labels like "12|34" ("0" = all singletons).
// Independent of the catalog's poset construction.
std::string partition_meet_label(const std::string& a, const std::string& b, int n);
bool partition_leq_label(const std::string& a, const std::string& b, int n);

}  // namespace oracles
