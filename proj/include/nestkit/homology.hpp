// Reduced integral homology via Smith normal form over exact integers.
#pragma once

#include "nestkit/simplicial.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

namespace nestkit {

using Int = boost::multiprecision::cpp_int;

struct HomologyGroup {
    long long rank = 0;
    std::vector<Int> torsion;  // each > 1, each dividing the next

    bool trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const HomologyGroup& o) const {
        return rank == o.rank && torsion == o.torsion;
    }
};

// Reduced homology per dimension 0..dim(complex). Missing dimensions are trivial.
struct HomologyResult {
    std::map<int, HomologyGroup> groups;

    HomologyGroup at(int d) const {
        auto it = groups.find(d);
        return it == groups.end() ? HomologyGroup{} : it->second;
    }
    bool all_trivial() const;
    bool operator==(const HomologyResult& o) const;
    std::string to_string() const;
};

// Sparse integer matrix in column-major form with a row occupancy index.
class SparseIntMatrix {
public:
    SparseIntMatrix(int rows, int cols);
    void set(int r, int c, Int v);
    int rows() const { return nrows_; }
    int cols() const { return ncols_; }

    // Invariant factors (positive, divisibility-ordered); destroys the matrix.
    std::vector<Int> invariant_factors() &&;

private:
    int nrows_, ncols_;
    std::vector<std::map<int, Int>> cols_;
    std::vector<std::set<int>> rows_;

    void add_col(int dst, int src, const Int& q);  // col dst -= q * col src
    void add_row(int dst, int src, const Int& q);  // row dst -= q * row src
    void swap_rows(int a, int b);
    void swap_cols(int a, int b);
    void drop(int r, int c);
};

// Reduced integral homology of a complex (uses the augmented chain complex,
// so a nonempty contractible complex reports all-trivial groups).
HomologyResult reduced_homology(const SimplicialComplex& c);

}  // namespace nestkit
