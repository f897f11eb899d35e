#include "nestkit/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nestkit {

bool HomologyResult::all_trivial() const {
    for (const auto& [d, g] : groups)
        if (!g.trivial()) return false;
    return true;
}

bool HomologyResult::operator==(const HomologyResult& o) const {
    std::set<int> dims;
    for (const auto& [d, g] : groups) dims.insert(d);
    for (const auto& [d, g] : o.groups) dims.insert(d);
    for (int d : dims)
        if (!(at(d) == o.at(d))) return false;
    return true;
}

std::string HomologyResult::to_string() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& [d, g] : groups) {
        if (g.trivial()) continue;
        if (any) os << ", ";
        any = true;
        os << "H~" << d << " = ";
        bool first = true;
        if (g.rank > 0) {
            os << "Z";
            if (g.rank > 1) os << "^" << g.rank;
            first = false;
        }
        for (const auto& t : g.torsion) {
            if (!first) os << " + ";
            os << "Z/" << t;
            first = false;
        }
    }
    if (!any) return "trivial";
    return os.str();
}

SparseIntMatrix::SparseIntMatrix(int rows, int cols)
    : nrows_(rows), ncols_(cols), cols_(cols), rows_(rows) {}

void SparseIntMatrix::set(int r, int c, Int v) {
    auto& col = cols_[c];
    if (v == 0) {
        if (col.erase(r)) rows_[r].erase(c);
        return;
    }
    col[r] = std::move(v);
    rows_[r].insert(c);
}

void SparseIntMatrix::add_col(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (const auto& [r, v] : cols_[src]) {
        auto it = cols_[dst].find(r);
        if (it == cols_[dst].end()) {
            cols_[dst].emplace(r, -q * v);
            rows_[r].insert(dst);
        } else {
            it->second -= q * v;
            if (it->second == 0) {
                cols_[dst].erase(it);
                rows_[r].erase(dst);
            }
        }
    }
}

void SparseIntMatrix::add_row(int dst, int src, const Int& q) {
    if (q == 0) return;
    // Copy: rows_[src] mutates as entries appear/disappear in dst.
    std::vector<int> src_cols(rows_[src].begin(), rows_[src].end());
    for (int c : src_cols) {
        const Int& v = cols_[c].at(src);
        auto it = cols_[c].find(dst);
        if (it == cols_[c].end()) {
            cols_[c].emplace(dst, -q * v);
            rows_[dst].insert(c);
        } else {
            it->second -= q * v;
            if (it->second == 0) {
                cols_[c].erase(it);
                rows_[dst].erase(c);
            }
        }
    }
}

void SparseIntMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    std::set<int> touched = rows_[a];
    touched.insert(rows_[b].begin(), rows_[b].end());
    for (int c : touched) {
        auto ia = cols_[c].find(a);
        auto ib = cols_[c].find(b);
        Int va = (ia != cols_[c].end()) ? ia->second : Int(0);
        Int vb = (ib != cols_[c].end()) ? ib->second : Int(0);
        if (ia != cols_[c].end()) cols_[c].erase(ia);
        if (ib != cols_[c].end()) cols_[c].erase(ib);
        rows_[a].erase(c);
        rows_[b].erase(c);
        if (vb != 0) {
            cols_[c][a] = std::move(vb);
            rows_[a].insert(c);
        }
        if (va != 0) {
            cols_[c][b] = std::move(va);
            rows_[b].insert(c);
        }
    }
}

void SparseIntMatrix::swap_cols(int a, int b) {
    if (a == b) return;
    for (const auto& [r, v] : cols_[a]) rows_[r].erase(a);
    for (const auto& [r, v] : cols_[b]) rows_[r].erase(b);
    std::swap(cols_[a], cols_[b]);
    for (const auto& [r, v] : cols_[a]) rows_[r].insert(a);
    for (const auto& [r, v] : cols_[b]) rows_[r].insert(b);
}

void SparseIntMatrix::drop(int r, int c) {
    std::vector<int> rc(rows_[r].begin(), rows_[r].end());
    for (int cc : rc) {
        cols_[cc].erase(r);
        rows_[r].erase(cc);
    }
    std::vector<std::pair<int, Int>> col(cols_[c].begin(), cols_[c].end());
    for (auto& [rr, v] : col) {
        rows_[rr].erase(c);
    }
    cols_[c].clear();
}

std::vector<Int> SparseIntMatrix::invariant_factors() && {
    std::vector<Int> diag;
    std::vector<bool> row_done(nrows_, false), col_done(ncols_, false);
    while (true) {
        // pivot: minimal |value|, then minimal fill estimate, then position
        int pr = -1, pc = -1;
        Int pv = 0;
        long long pscore = 0;
        for (int c = 0; c < ncols_; ++c) {
            if (col_done[c]) continue;
            for (const auto& [r, v] : cols_[c]) {
                if (row_done[r]) continue;
                Int av = abs(v);
                long long score = (long long)(rows_[r].size() - 1) * (cols_[c].size() - 1);
                if (pr == -1 || av < pv || (av == pv && score < pscore)) {
                    pr = r;
                    pc = c;
                    pv = av;
                    pscore = score;
                    if (pv == 1 && pscore == 0) break;
                }
            }
            if (pr != -1 && pv == 1 && pscore == 0) break;
        }
        if (pr == -1) break;

        // Clear column then row; euclidean swaps shrink the pivot when needed.
        while (true) {
            Int piv = cols_[pc].at(pr);
            // column entries
            int other = -1;
            for (const auto& [r, v] : cols_[pc])
                if (r != pr && !row_done[r]) {
                    other = r;
                    break;
                }
            if (other != -1) {
                Int v = cols_[pc].at(other);
                Int q = v / piv;
                add_row(other, pr, q);
                auto it = cols_[pc].find(other);
                if (it != cols_[pc].end() && it->second != 0) swap_rows(pr, other);
                continue;
            }
            // row entries
            int otherc = -1;
            for (int c : rows_[pr])
                if (c != pc && !col_done[c]) {
                    otherc = c;
                    break;
                }
            if (otherc != -1) {
                Int v = cols_[otherc].at(pr);
                Int q = v / piv;
                add_col(otherc, pc, q);
                auto it = cols_[otherc].find(pr);
                if (it != cols_[otherc].end() && it->second != 0) swap_cols(pc, otherc);
                continue;
            }
            break;
        }
        diag.push_back(abs(cols_[pc].at(pr)));
        row_done[pr] = true;
        col_done[pc] = true;
        drop(pr, pc);
    }
    // Normalize to the divisibility chain via pairwise gcd/lcm.
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(diag.begin(), diag.end());
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            if (diag[i + 1] % diag[i] != 0) {
                Int g = gcd(diag[i], diag[i + 1]);
                Int l = diag[i] / g * diag[i + 1];
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
        }
    }
    return diag;
}

namespace {

// boundary matrix d-faces -> (d-1)-faces over the augmented complex
SparseIntMatrix boundary_matrix(const std::vector<std::vector<int>>& lower,
                                const std::vector<std::vector<int>>& upper) {
    SparseIntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
    for (int j = 0; j < static_cast<int>(upper.size()); ++j) {
        const auto& f = upper[j];
        int sign = 1;
        for (std::size_t k = 0; k < f.size(); ++k) {
            std::vector<int> g;
            g.reserve(f.size() - 1);
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != k) g.push_back(f[i]);
            auto it = std::lower_bound(lower.begin(), lower.end(), g);
            m.set(static_cast<int>(it - lower.begin()), j, sign);
            sign = -sign;
        }
    }
    return m;
}

}  // namespace

HomologyResult reduced_homology(const SimplicialComplex& c) {
    if (c.face_count() > face_cap()) throw error("face cap exceeded");
    const int dim = c.dim();
    HomologyResult out;
    if (dim < 0) return out;

    std::vector<std::vector<std::vector<int>>> by_dim(dim + 2);  // index d+1 holds d-faces
    for (const auto& f : c.faces()) by_dim[f.size()].push_back(f);
    for (auto& v : by_dim) std::sort(v.begin(), v.end());  // lexicographic within a dimension

    // SNF of each boundary map; index d is the map from d-faces to (d-1)-faces.
    std::vector<std::vector<Int>> snf(dim + 2);
    for (int d = 0; d <= dim; ++d) {
        snf[d] = std::move(boundary_matrix(by_dim[d], by_dim[d + 1])).invariant_factors();
    }
    snf[dim + 1] = {};

    for (int d = 0; d <= dim; ++d) {
        long long faces_d = static_cast<long long>(by_dim[d + 1].size());
        long long rank_d = static_cast<long long>(snf[d].size());
        long long rank_d1 = (d + 1 <= dim) ? static_cast<long long>(snf[d + 1].size()) : 0;
        HomologyGroup g;
        g.rank = faces_d - rank_d - rank_d1;
        if (d + 1 <= dim)
            for (const auto& t : snf[d + 1])
                if (t > 1) g.torsion.push_back(t);
        out.groups[d] = g;
    }
    return out;
}

}  // namespace nestkit
