#include "nestkit/catalog.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace nestkit {

namespace {

using Part = std::vector<std::vector<int>>;  // blocks sorted, block lists sorted

std::string partition_label(const Part& p) {
    std::string out;
    for (const auto& b : p) {
        if (b.size() < 2) continue;
        if (!out.empty()) out += "|";
        for (int v : b) out += std::to_string(v);
    }
    return out.empty() ? "0" : out;
}

bool refines(const Part& p, const Part& q) {
    for (const auto& bp : p) {
        bool inside = false;
        for (const auto& bq : q) {
            if (std::includes(bq.begin(), bq.end(), bp.begin(), bp.end())) {
                inside = true;
                break;
            }
        }
        if (!inside) return false;
    }
    return true;
}

std::vector<Part> all_partitions(int n) {
    // restricted growth strings
    std::vector<Part> out;
    std::vector<int> rgs(n, 0);
    while (true) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        Part p(blocks);
        for (int i = 0; i < n; ++i) p[rgs[i]].push_back(i + 1);
        std::sort(p.begin(), p.end());
        out.push_back(std::move(p));
        // next RGS
        int i = n - 1;
        while (i > 0) {
            int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
            if (rgs[i] < cap) break;
            --i;
        }
        if (i == 0) break;
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
    // rank (descending block count) then block lists
    std::sort(out.begin(), out.end(), [n](const Part& a, const Part& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

Semilattice from_partitions(const std::vector<Part>& parts) {
    const int m = static_cast<int>(parts.size());
    std::vector<std::string> labels(m);
    std::vector<ElementSet> up(m, ElementSet(m));
    for (int i = 0; i < m; ++i) {
        labels[i] = partition_label(parts[i]);
        for (int j = 0; j < m; ++j)
            if (refines(parts[i], parts[j])) up[i].set(j);
    }
    return Semilattice::validate(Poset::from_relation(std::move(labels), up));
}

}  // namespace

Semilattice boolean_lattice(int n) {
    if (n < 1 || n > 6) throw error("boolean lattice size out of range [1,6]");
    std::vector<int> subsets;
    for (int mask = 0; mask < (1 << n); ++mask) subsets.push_back(mask);
    std::sort(subsets.begin(), subsets.end(), [](int a, int b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    const int m = static_cast<int>(subsets.size());
    std::vector<std::string> labels(m);
    std::vector<ElementSet> up(m, ElementSet(m));
    for (int i = 0; i < m; ++i) {
        if (subsets[i] == 0) {
            labels[i] = "0";
        } else {
            for (int b = 0; b < n; ++b)
                if (subsets[i] & (1 << b)) labels[i] += std::to_string(b + 1);
        }
        for (int j = 0; j < m; ++j)
            if ((subsets[i] & subsets[j]) == subsets[i]) up[i].set(j);
    }
    return Semilattice::validate(Poset::from_relation(std::move(labels), up));
}

Semilattice partition_lattice(int n) {
    if (n < 2 || n > 6) throw error("partition lattice size out of range [2,6]");
    return from_partitions(all_partitions(n));
}

Semilattice chain_lattice(int n) {
    if (n < 1) throw error("chain needs at least one element");
    std::vector<std::string> labels(n);
    std::vector<ElementSet> up(n, ElementSet(n));
    for (int i = 0; i < n; ++i) {
        labels[i] = std::to_string(i);
        for (int j = i; j < n; ++j) up[i].set(j);
    }
    return Semilattice::validate(Poset::from_relation(std::move(labels), up));
}

Semilattice bond_lattice(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 1 || vertex_count > 7) throw error("bond lattice needs 1..7 vertices");
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> adj(vertex_count + 1);
    for (auto [a, b] : edges) {
        if (a < 1 || a > vertex_count || b < 1 || b > vertex_count)
            throw error("edge endpoint out of range");
        if (a == b) throw error("graph is not simple: loop at " + std::to_string(a));
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw error("graph is not simple: repeated edge");
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    auto connected = [&](const std::vector<int>& block) {
        if (block.empty()) return true;
        std::set<int> in(block.begin(), block.end()), visited;
        std::vector<int> stack{block[0]};
        visited.insert(block[0]);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (in.count(w) && visited.insert(w).second) stack.push_back(w);
        }
        return visited.size() == block.size();
    };
    std::vector<Part> parts;
    for (const Part& p : all_partitions(vertex_count)) {
        bool ok = true;
        for (const auto& b : p)
            if (!connected(b)) {
                ok = false;
                break;
            }
        if (ok) parts.push_back(p);
    }
    return from_partitions(parts);
}

Semilattice remove_top(const Semilattice& s) {
    auto top = s.poset().unique_maximum();
    if (!top) throw error("no unique maximum to remove");
    ElementSet keep = s.poset().all();
    keep.reset(*top);
    return Semilattice::validate(s.poset().induced(keep));
}

}  // namespace nestkit
