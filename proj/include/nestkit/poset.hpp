// Finite posets and meet-semilattices with dense order incidence.
#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nestkit {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Set of element indices of a fixed-size poset.
using ElementSet = boost::dynamic_bitset<>;

ElementSet make_set(std::size_t universe, std::initializer_list<int> members);

class Poset {
public:
    Poset() = default;

    // Reflexive-transitive closure of the cover relation; validates acyclicity,
    // distinct labels, known labels. Element indexing follows input order.
    static Poset from_covers(const std::vector<std::string>& labels,
                             const std::vector<std::pair<std::string, std::string>>& covers);

    // Direct construction from a full order relation (checked: reflexive,
    // antisymmetric, transitive).
    static Poset from_relation(std::vector<std::string> labels,
                               const std::vector<ElementSet>& up_rows);

    int size() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_.at(i); }
    int index_of(const std::string& label) const;  // -1 if unknown

    bool leq(int a, int b) const { return up_[a].test(b); }
    bool lt(int a, int b) const { return a != b && leq(a, b); }
    bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }

    // up(a) = {b : a <= b}, down(a) = {b : b <= a}
    const ElementSet& up(int a) const { return up_[a]; }
    const ElementSet& down(int a) const { return down_[a]; }

    ElementSet all() const { ElementSet s(size()); s.set(); return s; }

    // Covering pairs (a,b) with a < b and nothing strictly between; sorted.
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    // Maximal elements of a subset under the order.
    ElementSet max_of(const ElementSet& subset) const;
    ElementSet min_of(const ElementSet& subset) const;

    std::optional<int> unique_minimum() const;
    std::optional<int> unique_maximum() const;

    // Induced subposet on the given carrier, original labels; out_map (optional)
    // receives new-index -> old-index.
    Poset induced(const ElementSet& carrier, std::vector<int>* out_map = nullptr) const;

    bool same_order_as(const Poset& other) const;  // labels ignored

private:
    std::vector<std::string> labels_;
    std::vector<ElementSet> up_;
    std::vector<ElementSet> down_;
    std::vector<std::pair<int, int>> covers_;

    void finalize_from_up();  // fills down_, covers_
};

class Semilattice {
public:
    Semilattice() = default;

    // Validates that every pair has a unique greatest lower bound.
    static Semilattice validate(const Poset& p);

    const Poset& poset() const { return base_; }
    int size() const { return base_.size(); }
    const std::string& label(int i) const { return base_.label(i); }
    int index_of(const std::string& label) const { return base_.index_of(label); }
    bool leq(int a, int b) const { return base_.leq(a, b); }
    bool lt(int a, int b) const { return base_.lt(a, b); }

    int bottom() const { return bottom_; }
    const std::vector<int>& atoms() const { return atoms_; }
    const ElementSet& atom_set() const { return atom_set_; }

    int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * base_.size() + b]; }
    int meet_set(const ElementSet& subset) const;  // requires nonempty

    std::optional<int> join(int a, int b) const;
    std::optional<int> join_set(const ElementSet& subset) const;  // empty -> bottom

    ElementSet atoms_below(int x) const;
    ElementSet max_of(const ElementSet& subset) const { return base_.max_of(subset); }

    // Induced poset on [x,y]; requires x <= y.
    Poset interval(int x, int y, std::vector<int>* out_map = nullptr) const;
    std::vector<int> interval_elements(int x, int y) const;

    // Every x > bottom is the join of the atoms below it.
    bool is_atomic() const;

    ElementSet nonbottom() const;

private:
    Poset base_;
    int bottom_ = -1;
    std::vector<int> meet_;
    std::vector<int> atoms_;
    ElementSet atom_set_;
};

// Componentwise order on tuples; labels "(a,b,...)"; tuple indexing is
// lexicographic with the first component slowest.
Poset product(const std::vector<Poset>& factors);

// Order isomorphism search: color refinement on (up/down degrees) then
// backtracking. Deterministic given input order. Returns p-index -> q-index.
std::optional<std::vector<int>> is_isomorphic(const Poset& p, const Poset& q);

// Finds an isomorphism extending the prescribed partial map (pairs (i in p, j in q)).
std::optional<std::vector<int>> is_isomorphic_fixing(
    const Poset& p, const Poset& q, const std::vector<std::pair<int, int>>& fixed);

}  // namespace nestkit
