#include "qsc/lattice.hpp"

#include <algorithm>

#include "qsc/errors.hpp"

namespace qsc {

IntMat identity_mat(int n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    const size_t n = a.size(), k = b.size(), p = b.empty() ? 0 : b[0].size();
    IntMat out(n, std::vector<Int>(p, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

SmithResult smith_normal_form(IntMat a) {
    const int m = static_cast<int>(a.size());
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    IntMat left = identity_mat(m), right = identity_mat(n);

    auto row_swap = [&](int i, int j) {
        std::swap(a[i], a[j]);
        std::swap(left[i], left[j]);
    };
    auto col_swap = [&](int i, int j) {
        for (int r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
        for (int r = 0; r < n; ++r) std::swap(right[r][i], right[r][j]);
    };
    auto row_addmul = [&](int dst, int src, const Int& c) { // row dst += c * row src
        for (int j = 0; j < n; ++j) a[dst][j] += c * a[src][j];
        for (int j = 0; j < m; ++j) left[dst][j] += c * left[src][j];
    };
    auto col_addmul = [&](int dst, int src, const Int& c) {
        for (int r = 0; r < m; ++r) a[r][dst] += c * a[r][src];
        for (int r = 0; r < n; ++r) right[r][dst] += c * right[r][src];
    };
    auto row_negate = [&](int i) {
        for (int j = 0; j < n; ++j) a[i][j] = -a[i][j];
        for (int j = 0; j < m; ++j) left[i][j] = -left[i][j];
    };

    const int steps = std::min(m, n);
    for (int t = 0; t < steps; ++t) {
        // pivot: smallest nonzero |entry| in the trailing submatrix
        int pr = -1, pc = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j)
                if (a[i][j] != 0 &&
                    (pr < 0 || abs(a[i][j]) < abs(a[pr][pc])))
                    { pr = i; pc = j; }
        if (pr < 0) break;
        row_swap(t, pr);
        col_swap(t, pc);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < m; ++i)
                if (a[i][t] != 0) {
                    Int q = a[i][t] / a[t][t];
                    row_addmul(i, t, -q);
                    if (a[i][t] != 0) { row_swap(t, i); clean = false; }
                }
            for (int j = t + 1; j < n; ++j)
                if (a[t][j] != 0) {
                    Int q = a[t][j] / a[t][t];
                    col_addmul(j, t, -q);
                    if (a[t][j] != 0) { col_swap(t, j); clean = false; }
                }
        }
        if (a[t][t] < 0) row_negate(t);
    }
    // enforce the divisibility chain d_t | d_{t+1}
    for (int t = 0; t + 1 < steps; ++t) {
        if (a[t][t] == 0) continue;
        for (int j = t + 1; j < steps; ++j) {
            if (a[j][j] % a[t][t] == 0) continue;
            // mix row j into row t and re-clear the 2x2 block
            col_addmul(t, j, 1);
            bool clean = false;
            while (!clean) {
                clean = true;
                if (a[j][t] != 0) {
                    Int q = a[t][t] == 0 ? Int(0) : a[j][t] / a[t][t];
                    row_addmul(j, t, -q);
                    if (a[j][t] != 0) { row_swap(t, j); clean = false; }
                }
                if (a[t][j] != 0) {
                    Int q = a[t][t] == 0 ? Int(0) : a[t][j] / a[t][t];
                    col_addmul(j, t, -q);
                    if (a[t][j] != 0) { col_swap(t, j); clean = false; }
                }
            }
            if (a[t][t] < 0) row_negate(t);
            if (a[j][j] < 0) row_negate(j);
            j = t; // recheck the whole tail against the new d_t
        }
    }
    return SmithResult{a, left, right};
}

std::vector<Int> elementary_divisors(const IntMat& a) {
    SmithResult r = smith_normal_form(a);
    std::vector<Int> d;
    const int k = static_cast<int>(std::min(r.s.size(), r.s.empty() ? 0 : r.s[0].size()));
    for (int i = 0; i < k; ++i)
        if (r.s[i][i] != 0) d.push_back(r.s[i][i]);
    return d;
}

IntMat kernel_basis(const IntMat& a) {
    const int m = static_cast<int>(a.size());
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    SmithResult r = smith_normal_form(a);
    IntMat basis;
    for (int j = 0; j < n; ++j) {
        bool zero_col = j >= m || r.s[j][j] == 0;
        if (!zero_col) continue;
        std::vector<Int> v(n);
        for (int i = 0; i < n; ++i) v[i] = r.right[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

Int QuotientStructure::order() const {
    if (free_rank > 0) return 0;
    Int o = 1;
    for (const Int& d : torsion) o *= d;
    return o;
}

QuotientStructure quotient_structure(const IntMat& cols, int n) {
    // cols: n x k matrix whose columns generate the sublattice
    SmithResult r = smith_normal_form(cols);
    QuotientStructure q;
    int pivots = 0;
    const int k = cols.empty() ? 0 : static_cast<int>(cols[0].size());
    for (int i = 0; i < std::min(n, k); ++i)
        if (r.s[i][i] != 0) {
            ++pivots;
            if (r.s[i][i] != 1) q.torsion.push_back(r.s[i][i]);
        }
    q.free_rank = n - pivots;
    return q;
}

IntMat row_hnf(IntMat a) {
    const int m = static_cast<int>(a.size());
    const int n = m == 0 ? 0 : static_cast<int>(a[0].size());
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        // reduce column `col` below `row` with euclidean row ops
        while (true) {
            int pivot = -1;
            for (int i = row; i < m; ++i)
                if (a[i][col] != 0 && (pivot < 0 || abs(a[i][col]) < abs(a[pivot][col]))) pivot = i;
            if (pivot < 0) break;
            std::swap(a[row], a[pivot]);
            bool again = false;
            for (int i = row + 1; i < m; ++i)
                if (a[i][col] != 0) {
                    Int q = a[i][col] / a[row][col];
                    for (int j = 0; j < n; ++j) a[i][j] -= q * a[row][j];
                    if (a[i][col] != 0) again = true;
                }
            if (!again) break;
        }
        if (a[row][col] == 0) continue;
        if (a[row][col] < 0)
            for (int j = 0; j < n; ++j) a[row][j] = -a[row][j];
        for (int i = 0; i < row; ++i) {
            // canonical: entries above a pivot reduced into [0, pivot)
            Int q = a[i][col] / a[row][col];
            if (a[i][col] - q * a[row][col] < 0) q -= 1;
            if (q != 0)
                for (int j = 0; j < n; ++j) a[i][j] -= q * a[row][j];
        }
        ++row;
    }
    a.resize(row);
    return a;
}

bool same_row_lattice(const IntMat& a, const IntMat& b) {
    return row_hnf(a) == row_hnf(b);
}

} // namespace qsc
