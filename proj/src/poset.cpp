#include "nestkit/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nestkit {

ElementSet make_set(std::size_t universe, std::initializer_list<int> members) {
    ElementSet s(universe);
    for (int m : members) s.set(static_cast<std::size_t>(m));
    return s;
}

int Poset::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

Poset Poset::from_covers(const std::vector<std::string>& labels,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
    const int n = static_cast<int>(labels.size());
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) {
        if (!index.emplace(labels[i], i).second)
            throw error("duplicate label '" + labels[i] + "'");
    }
    std::vector<std::vector<int>> succ(n);
    for (const auto& [lo, hi] : covers) {
        auto a = index.find(lo), b = index.find(hi);
        if (a == index.end()) throw error("unknown label '" + lo + "' in cover");
        if (b == index.end()) throw error("unknown label '" + hi + "' in cover");
        succ[a->second].push_back(b->second);
    }
    // Kahn topological order to detect cycles.
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j : succ[i]) ++indeg[j];
    std::vector<int> queue;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    int seen = 0;
    std::vector<int> topo;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        topo.push_back(v);
        ++seen;
        for (int j : succ[v])
            if (--indeg[j] == 0) queue.push_back(j);
    }
    if (seen != n) throw error("cycle detected in cover relation");

    Poset p;
    p.labels_ = labels;
    p.up_.assign(n, ElementSet(n));
    for (int i = 0; i < n; ++i) p.up_[i].set(i);
    // Accumulate reachability in reverse topological order.
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        for (int j : succ[*it]) p.up_[*it] |= p.up_[j];
    }
    p.finalize_from_up();
    return p;
}

Poset Poset::from_relation(std::vector<std::string> labels, const std::vector<ElementSet>& up_rows) {
    const int n = static_cast<int>(labels.size());
    if (static_cast<int>(up_rows.size()) != n) throw error("relation size mismatch");
    for (int i = 0; i < n; ++i) {
        if (!up_rows[i].test(i)) throw error("relation not reflexive");
        for (int j = 0; j < n; ++j) {
            if (i != j && up_rows[i].test(j) && up_rows[j].test(i))
                throw error("relation not antisymmetric");
            if (up_rows[i].test(j) && !up_rows[j].is_subset_of(up_rows[i]))
                throw error("relation not transitive");
        }
    }
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i)
        if (!index.emplace(labels[i], i).second)
            throw error("duplicate label '" + labels[i] + "'");
    Poset p;
    p.labels_ = std::move(labels);
    p.up_ = up_rows;
    p.finalize_from_up();
    return p;
}

void Poset::finalize_from_up() {
    const int n = size();
    down_.assign(n, ElementSet(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (up_[i].test(j)) down_[j].set(i);
    covers_.clear();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b || !up_[a].test(b)) continue;
            // b covers a iff nothing strictly between
            ElementSet between = up_[a] & down_[b];
            if (between.count() == 2) covers_.emplace_back(a, b);
        }
    }
    std::sort(covers_.begin(), covers_.end());
}

ElementSet Poset::max_of(const ElementSet& subset) const {
    ElementSet out(subset);
    for (auto i = subset.find_first(); i != ElementSet::npos; i = subset.find_next(i)) {
        ElementSet above = up_[i] & subset;
        above.reset(i);
        if (above.any()) out.reset(i);
    }
    return out;
}

ElementSet Poset::min_of(const ElementSet& subset) const {
    ElementSet out(subset);
    for (auto i = subset.find_first(); i != ElementSet::npos; i = subset.find_next(i)) {
        ElementSet below = down_[i] & subset;
        below.reset(i);
        if (below.any()) out.reset(i);
    }
    return out;
}

std::optional<int> Poset::unique_minimum() const {
    for (int i = 0; i < size(); ++i)
        if (static_cast<int>(up_[i].count()) == size()) return i;
    return std::nullopt;
}

std::optional<int> Poset::unique_maximum() const {
    for (int i = 0; i < size(); ++i)
        if (static_cast<int>(down_[i].count()) == size()) return i;
    return std::nullopt;
}

Poset Poset::induced(const ElementSet& carrier, std::vector<int>* out_map) const {
    std::vector<int> elems;
    for (auto i = carrier.find_first(); i != ElementSet::npos; i = carrier.find_next(i))
        elems.push_back(static_cast<int>(i));
    const int m = static_cast<int>(elems.size());
    std::vector<std::string> labels(m);
    std::vector<ElementSet> up(m, ElementSet(m));
    for (int a = 0; a < m; ++a) {
        labels[a] = labels_[elems[a]];
        for (int b = 0; b < m; ++b)
            if (leq(elems[a], elems[b])) up[a].set(b);
    }
    if (out_map) *out_map = elems;
    Poset p;
    p.labels_ = std::move(labels);
    p.up_ = std::move(up);
    p.finalize_from_up();
    return p;
}

bool Poset::same_order_as(const Poset& other) const {
    return size() == other.size() && up_ == other.up_;
}

Semilattice Semilattice::validate(const Poset& p) {
    const int n = p.size();
    if (n == 0) throw error("empty poset is not a meet-semilattice");
    Semilattice s;
    s.base_ = p;
    auto bot = p.unique_minimum();
    if (!bot) throw error("no global minimum");
    s.bottom_ = *bot;
    s.meet_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            ElementSet clb = p.down(a) & p.down(b);
            int m = -1;
            for (auto z = clb.find_first(); z != ElementSet::npos; z = clb.find_next(z)) {
                ElementSet strictly_above = p.up(z) & clb;
                strictly_above.reset(z);
                if (strictly_above.none()) {
                    if (m != -1)
                        throw error("elements '" + p.label(a) + "' and '" + p.label(b) +
                                    "' have multiple maximal common lower bounds");
                    m = static_cast<int>(z);
                }
            }
            if (m == -1)
                throw error("elements '" + p.label(a) + "' and '" + p.label(b) +
                            "' have no common lower bound");
            s.meet_[static_cast<std::size_t>(a) * n + b] = m;
            s.meet_[static_cast<std::size_t>(b) * n + a] = m;
        }
    }
    for (int a = 0; a < n; ++a) {
        if (a == s.bottom_) continue;
        ElementSet below = p.down(a);
        below.reset(a);
        below.reset(s.bottom_);
        if (below.none()) {
            s.atoms_.push_back(a);
        }
    }
    s.atom_set_ = ElementSet(n);
    for (int a : s.atoms_) s.atom_set_.set(a);
    return s;
}

int Semilattice::meet_set(const ElementSet& subset) const {
    auto i = subset.find_first();
    if (i == ElementSet::npos) throw error("meet of empty set");
    int acc = static_cast<int>(i);
    for (i = subset.find_next(i); i != ElementSet::npos; i = subset.find_next(i))
        acc = meet(acc, static_cast<int>(i));
    return acc;
}

std::optional<int> Semilattice::join(int a, int b) const {
    ElementSet ub = base_.up(a) & base_.up(b);
    if (ub.none()) return std::nullopt;
    return meet_set(ub);
}

std::optional<int> Semilattice::join_set(const ElementSet& subset) const {
    if (subset.none()) return bottom_;
    ElementSet ub = base_.all();
    for (auto i = subset.find_first(); i != ElementSet::npos; i = subset.find_next(i))
        ub &= base_.up(i);
    if (ub.none()) return std::nullopt;
    return meet_set(ub);
}

ElementSet Semilattice::atoms_below(int x) const {
    return atom_set_ & base_.down(x);
}

std::vector<int> Semilattice::interval_elements(int x, int y) const {
    if (!leq(x, y)) throw error("interval requires x <= y");
    ElementSet carrier = base_.up(x) & base_.down(y);
    std::vector<int> out;
    for (auto i = carrier.find_first(); i != ElementSet::npos; i = carrier.find_next(i))
        out.push_back(static_cast<int>(i));
    return out;
}

Poset Semilattice::interval(int x, int y, std::vector<int>* out_map) const {
    if (!leq(x, y)) throw error("interval requires x <= y");
    return base_.induced(base_.up(x) & base_.down(y), out_map);
}

bool Semilattice::is_atomic() const {
    for (int x = 0; x < size(); ++x) {
        if (x == bottom_) continue;
        auto j = join_set(atoms_below(x));
        if (!j || *j != x) return false;
    }
    return true;
}

ElementSet Semilattice::nonbottom() const {
    ElementSet s = base_.all();
    s.reset(bottom_);
    return s;
}

Poset product(const std::vector<Poset>& factors) {
    if (factors.empty()) throw error("product of empty list");
    const int k = static_cast<int>(factors.size());
    long long total = 1;
    for (const auto& f : factors) {
        total *= f.size();
        if (total > (1 << 20)) throw error("product too large");
    }
    const int n = static_cast<int>(total);
    std::vector<int> tup(k, 0);
    std::vector<std::vector<int>> tuples;
    tuples.reserve(n);
    while (true) {
        tuples.push_back(tup);
        int pos = k - 1;
        while (pos >= 0 && tup[pos] + 1 >= factors[pos].size()) {
            tup[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++tup[pos];
    }
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        std::string l = "(";
        for (int c = 0; c < k; ++c) {
            if (c) l += ",";
            l += factors[c].label(tuples[i][c]);
        }
        l += ")";
        labels[i] = l;
    }
    std::vector<ElementSet> up(n, ElementSet(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool le = true;
            for (int c = 0; c < k && le; ++c) le = factors[c].leq(tuples[i][c], tuples[j][c]);
            if (le) up[i].set(j);
        }
    return Poset::from_relation(std::move(labels), up);
}

namespace {

// Iterated refinement of (down-size, up-size, cover degrees) colors.
std::vector<long long> order_colors(const Poset& p) {
    const int n = p.size();
    std::vector<int> cov_up(n, 0), cov_dn(n, 0);
    for (auto [a, b] : p.covers()) {
        ++cov_up[a];
        ++cov_dn[b];
    }
    std::vector<long long> color(n);
    for (int i = 0; i < n; ++i)
        color[i] = ((long long)p.down(i).count() << 40) ^ ((long long)p.up(i).count() << 24) ^
                   (cov_up[i] << 12) ^ cov_dn[i];
    for (int round = 0; round < n; ++round) {
        std::vector<long long> next(n);
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            std::vector<long long> sig;
            for (int j = 0; j < n; ++j) {
                if (j == i || !p.comparable(i, j)) continue;
                sig.push_back(color[j] * 2 + (p.leq(i, j) ? 1 : 0));
            }
            std::sort(sig.begin(), sig.end());
            long long h = color[i];
            for (long long v : sig) h = h * 1000003LL + v;
            next[i] = h;
        }
        // Relabel canonically so colors stay comparable across p and q.
        std::vector<long long> sorted(next);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int i = 0; i < n; ++i) {
            long long c =
                std::lower_bound(sorted.begin(), sorted.end(), next[i]) - sorted.begin();
            if (c != color[i]) changed = true;
            next[i] = c;
        }
        color = next;
        if (!changed) break;
    }
    return color;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Poset& p, const Poset& q) {
    return is_isomorphic_fixing(p, q, {});
}

std::optional<std::vector<int>> is_isomorphic_fixing(
    const Poset& p, const Poset& q, const std::vector<std::pair<int, int>>& fixed) {
    if (p.size() != q.size()) return std::nullopt;
    const int n = p.size();
    auto cp = order_colors(p);
    auto cq = order_colors(q);
    {
        auto sp = cp;
        auto sq = cq;
        std::sort(sp.begin(), sp.end());
        std::sort(sq.begin(), sq.end());
        if (sp != sq) return std::nullopt;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    for (auto [i, j] : fixed) {
        if (cp[i] != cq[j]) return std::nullopt;
        if (map[i] != -1 || used[j]) return std::nullopt;
        map[i] = j;
        used[j] = true;
    }
    // Backtrack in index order, but honor prescribed entries.
    struct Rec {
        const Poset &p, &q;
        const std::vector<long long>&cp, &cq;
        std::vector<int>& map;
        std::vector<bool>& used;
        bool go(int next) {
            const int n = p.size();
            while (next < n && map[next] != -1) {
                for (int prev = 0; prev < next; ++prev) {
                    if (map[prev] < 0) continue;
                    if (p.leq(next, prev) != q.leq(map[next], map[prev]) ||
                        p.leq(prev, next) != q.leq(map[prev], map[next]))
                        return false;
                }
                ++next;
            }
            if (next == n) return true;
            for (int cand = 0; cand < n; ++cand) {
                if (used[cand] || cq[cand] != cp[next]) continue;
                bool ok = true;
                for (int prev = 0; prev < next && ok; ++prev) {
                    if (map[prev] < 0) continue;
                    ok = (p.leq(next, prev) == q.leq(cand, map[prev])) &&
                         (p.leq(prev, next) == q.leq(map[prev], cand));
                }
                if (!ok) continue;
                map[next] = cand;
                used[cand] = true;
                if (go(next + 1)) return true;
                used[cand] = false;
                map[next] = -1;
            }
            return false;
        }
    } rec{p, q, cp, cq, map, used};
    if (!rec.go(0)) return std::nullopt;
    // Verify prescribed pairs survived (they were seeded into map).
    for (auto [i, j] : fixed)
        if (map[i] != j) return std::nullopt;
    return map;
}

}  // namespace nestkit
