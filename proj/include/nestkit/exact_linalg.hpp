// Exact rational linear algebra for cone geometry. No floating point.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

namespace nestkit {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Rank over the rationals (fraction-free elimination).
int rational_rank(const std::vector<std::vector<long long>>& rows);

// Unique coefficients with sum_i lambda_i * rays[i] = point, for linearly
// independent rays; nullopt when the point is outside their span.
std::optional<std::vector<Rat>> solve_cone_coords(
    const std::vector<std::vector<long long>>& rays, const std::vector<long long>& point);

// point ∈ cone(rays): solvable with all lambda >= 0 (strict > 0 for relint).
bool cone_contains(const std::vector<std::vector<long long>>& rays,
                   const std::vector<long long>& point, bool strict);

// Feasibility of { A x = b, x >= 0 } by an exact phase-1 simplex (Bland's rule).
bool lp_feasible_eq_nonneg(std::vector<std::vector<Rat>> A, std::vector<Rat> b);

// Divide by the gcd of the entries; zero vectors are rejected.
std::vector<long long> primitive_vector(std::vector<long long> v);

}  // namespace nestkit
