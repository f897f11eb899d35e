// Abstract simplicial complexes stored with full face lists, order complexes.
#pragma once

#include "nestkit/poset.hpp"

#include <vector>

namespace nestkit {

// Faces are sorted vertex-index vectors in canonical (size, lex) order.
// The empty face is always present.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Closure under subsets is computed from the given faces.
    static SimplicialComplex from_faces(std::vector<std::string> vertex_labels,
                                        std::vector<std::vector<int>> faces);

    const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
    int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }

    const std::vector<std::vector<int>>& faces() const { return faces_; }
    std::vector<std::vector<int>> facets() const;
    bool has_face(const std::vector<int>& face) const;  // face must be sorted
    int dim() const;                                    // -1 for {{}} only
    std::size_t face_count() const { return faces_.size(); }

    // Faces containing the given vertex, with the vertex removed (the link),
    // plus all faces avoiding it (the deletion) — used for cone base extraction.
    SimplicialComplex restriction_without_vertex(int v) const;

    bool operator==(const SimplicialComplex& o) const {
        return vertex_labels_ == o.vertex_labels_ && faces_ == o.faces_;
    }

private:
    std::vector<std::string> vertex_labels_;
    std::vector<std::vector<int>> faces_;
};

// Canonical (size, then lexicographic) comparison of faces.
bool face_less(const std::vector<int>& a, const std::vector<int>& b);

// Effective cap on enumerated face counts; NESTKIT_FACE_CAP overrides 2^20.
std::size_t face_cap();

// Chains of p (including the empty chain); vertex i of the output is element i.
SimplicialComplex order_complex(const Poset& p);

// Alternating sum over nonempty faces.
long long euler_characteristic(const SimplicialComplex& c);

// True iff F ∪ {apex} is a face for every face F.
bool is_cone(const SimplicialComplex& c, int apex);

}  // namespace nestkit
