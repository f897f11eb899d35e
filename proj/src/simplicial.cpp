#include "nestkit/simplicial.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace nestkit {

bool face_less(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::size_t face_cap() {
    if (const char* env = std::getenv("NESTKIT_FACE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 20;
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertex_labels,
                                                std::vector<std::vector<int>> faces) {
    const int nv = static_cast<int>(vertex_labels.size());
    std::set<std::vector<int>> closed;
    closed.insert(std::vector<int>{});
    const std::size_t cap = face_cap();
    // Close under subsets by peeling one vertex at a time.
    std::vector<std::vector<int>> stack;
    for (auto& f : faces) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (int v : f)
            if (v < 0 || v >= nv) throw error("face references unknown vertex index");
        stack.push_back(std::move(f));
    }
    while (!stack.empty()) {
        std::vector<int> f = std::move(stack.back());
        stack.pop_back();
        if (!closed.insert(f).second) continue;
        if (closed.size() > cap) throw error("face cap exceeded");
        if (f.size() <= 1) continue;
        for (std::size_t k = 0; k < f.size(); ++k) {
            std::vector<int> g;
            g.reserve(f.size() - 1);
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != k) g.push_back(f[i]);
            if (!closed.count(g)) stack.push_back(std::move(g));
        }
    }
    SimplicialComplex c;
    c.vertex_labels_ = std::move(vertex_labels);
    c.faces_.assign(closed.begin(), closed.end());
    std::sort(c.faces_.begin(), c.faces_.end(), face_less);
    return c;
}

bool SimplicialComplex::has_face(const std::vector<int>& face) const {
    return std::binary_search(faces_.begin(), faces_.end(), face, face_less);
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
    std::vector<std::vector<int>> out;
    for (const auto& f : faces_) {
        bool maximal = true;
        // f is maximal iff no face extends it by one vertex.
        for (int v = 0; v < vertex_count() && maximal; ++v) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            std::vector<int> g(f);
            g.insert(std::lower_bound(g.begin(), g.end(), v), v);
            if (has_face(g)) maximal = false;
        }
        if (maximal) out.push_back(f);
    }
    if (out.size() > 1) {
        // {} is only a facet of the empty complex
        out.erase(std::remove(out.begin(), out.end(), std::vector<int>{}), out.end());
    }
    return out;
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : faces_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

SimplicialComplex SimplicialComplex::restriction_without_vertex(int v) const {
    std::vector<std::vector<int>> kept;
    for (const auto& f : faces_)
        if (!std::binary_search(f.begin(), f.end(), v)) kept.push_back(f);
    SimplicialComplex c;
    c.vertex_labels_ = vertex_labels_;
    c.faces_ = std::move(kept);
    return c;
}

SimplicialComplex order_complex(const Poset& p) {
    const int n = p.size();
    std::vector<std::vector<int>> chains;
    chains.push_back({});
    const std::size_t cap = face_cap();
    // DFS extending chains by larger-index comparable elements.
    struct Item {
        std::vector<int> chain;
        int start;
    };
    std::vector<Item> stack;
    stack.push_back({{}, 0});
    while (!stack.empty()) {
        Item it = std::move(stack.back());
        stack.pop_back();
        for (int v = it.start; v < n; ++v) {
            bool ok = true;
            for (int u : it.chain)
                if (!p.comparable(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            std::vector<int> next(it.chain);
            next.push_back(v);
            chains.push_back(next);
            if (chains.size() > cap) throw error("face cap exceeded");
            stack.push_back({std::move(next), v + 1});
        }
    }
    SimplicialComplex c = SimplicialComplex::from_faces(p.labels(), std::move(chains));
    return c;
}

long long euler_characteristic(const SimplicialComplex& c) {
    long long chi = 0;
    for (const auto& f : c.faces()) {
        if (f.empty()) continue;
        chi += (f.size() % 2 == 1) ? 1 : -1;
    }
    return chi;
}

bool is_cone(const SimplicialComplex& c, int apex) {
    if (apex < 0 || apex >= c.vertex_count()) throw error("unknown apex vertex");
    for (const auto& f : c.faces()) {
        if (std::binary_search(f.begin(), f.end(), apex)) continue;
        std::vector<int> g(f);
        g.insert(std::lower_bound(g.begin(), g.end(), apex), apex);
        if (!c.has_face(g)) return false;
    }
    return true;
}

}  // namespace nestkit
