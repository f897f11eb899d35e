#include "nestkit/exact_linalg.hpp"

#include "nestkit/poset.hpp"  // nestkit::error

#include <algorithm>
#include <numeric>

namespace nestkit {

int rational_rank(const std::vector<std::vector<long long>>& rows) {
    if (rows.empty()) return 0;
    const std::size_t nc = rows[0].size();
    std::vector<std::vector<BigInt>> m(rows.size(), std::vector<BigInt>(nc));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw error("ragged matrix");
        for (std::size_t j = 0; j < nc; ++j) m[i][j] = rows[i][j];
    }
    int rank = 0;
    BigInt prev = 1;
    std::size_t col = 0;
    for (std::size_t r = 0; r < m.size() && col < nc; ++col) {
        std::size_t piv = r;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < nc; ++j)
                m[i][j] = (m[r][col] * m[i][j] - m[i][col] * m[r][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++rank;
        ++r;
    }
    return rank;
}

std::optional<std::vector<Rat>> solve_cone_coords(
    const std::vector<std::vector<long long>>& rays, const std::vector<long long>& point) {
    const int k = static_cast<int>(rays.size());
    const int n = static_cast<int>(point.size());
    if (k == 0) {
        for (long long c : point)
            if (c != 0) return std::nullopt;
        return std::vector<Rat>{};
    }
    // augmented system over rationals, columns = rays
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(k + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < k; ++j) m[i][j] = rays[j].at(i);
        m[i][k] = point[i];
    }
    std::vector<int> pivot_row(k, -1);
    int r = 0;
    for (int c = 0; c < k && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv == -1) continue;
        std::swap(m[r], m[piv]);
        for (int i = 0; i < n; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[r][c];
            for (int j = c; j <= k; ++j) m[i][j] -= f * m[r][j];
        }
        pivot_row[c] = r;
        ++r;
    }
    // consistency: rows beyond rank must have zero rhs
    for (int i = r; i < n; ++i)
        if (m[i][k] != 0) return std::nullopt;
    // independence expected from callers; a free column means dependent rays
    std::vector<Rat> lambda(k);
    for (int c = 0; c < k; ++c) {
        if (pivot_row[c] == -1) throw error("cone rays are linearly dependent");
        lambda[c] = m[pivot_row[c]][k] / m[pivot_row[c]][c];
    }
    return lambda;
}

bool cone_contains(const std::vector<std::vector<long long>>& rays,
                   const std::vector<long long>& point, bool strict) {
    auto lam = solve_cone_coords(rays, point);
    if (!lam) return false;
    for (const auto& l : *lam) {
        if (strict ? (l <= 0) : (l < 0)) return false;
    }
    return true;
}

bool lp_feasible_eq_nonneg(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
    const int m = static_cast<int>(A.size());
    if (m == 0) return true;
    const int n = static_cast<int>(A[0].size());
    // flip rows so b >= 0; start from the artificial basis and minimize the
    // artificial sum w. Row m tracks w expressed in the nonbasic variables:
    // w = T[m][rhs] - sum_j T[m][j] * x_j ... kept as T[m][j] = coefficient
    // whose positive sign signals that raising x_j lowers w.
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) {
            b[i] = -b[i];
            for (auto& v : A[i]) v = -v;
        }
    }
    const int total = n + m;  // columns 0..n-1 original, n..n+m-1 artificial
    std::vector<std::vector<Rat>> T(m + 1, std::vector<Rat>(total + 1));
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
        T[i][n + i] = 1;
        T[i][total] = b[i];
        basis[i] = n + i;
    }
    for (int j = 0; j < n; ++j) {
        Rat sum = 0;
        for (int i = 0; i < m; ++i) sum += T[i][j];
        T[m][j] = sum;
    }
    {
        Rat sum = 0;
        for (int i = 0; i < m; ++i) sum += T[i][total];
        T[m][total] = sum;
    }

    while (true) {
        // Bland: first original column that can lower w; artificials never re-enter
        int enter = -1;
        for (int j = 0; j < n; ++j)
            if (T[m][j] > 0) {
                enter = j;
                break;
            }
        if (enter == -1) break;
        int leave = -1;
        Rat best;
        for (int i = 0; i < m; ++i) {
            if (T[i][enter] <= 0) continue;
            Rat ratio = T[i][total] / T[i][enter];
            if (leave == -1 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == -1) throw error("phase-1 simplex became unbounded");
        Rat pv = T[leave][enter];
        for (int j = 0; j <= total; ++j) T[leave][j] /= pv;
        for (int i = 0; i <= m; ++i) {
            if (i == leave || T[i][enter] == 0) continue;
            Rat f = T[i][enter];
            for (int j = 0; j <= total; ++j) T[i][j] -= f * T[leave][j];
        }
        basis[leave] = enter;
    }
    return T[m][total] == 0;
}

std::vector<long long> primitive_vector(std::vector<long long> v) {
    long long g = 0;
    for (long long c : v) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) throw error("zero vector cannot be a ray");
    if (g > 1)
        for (auto& c : v) c /= g;
    return v;
}

}  // namespace nestkit
