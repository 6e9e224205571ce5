#pragma once

#include "arith.hpp"

#include <optional>
#include <utility>

namespace cytoric {

// ---------------------------------------------------------------------------
// Rational elimination
// ---------------------------------------------------------------------------

inline RatMat to_rat_mat(const IntMat& m) {
    RatMat r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = to_rat(m[i]);
    return r;
}

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(RatMat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t sel = row;
        while (sel < rows && m[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[row]);
        Rat piv = m[row][col];
        for (std::size_t j = col; j < cols; ++j) m[row][j] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == 0) continue;
            Rat f = m[i][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank_rat(RatMat m) { return rref(m).size(); }

inline std::size_t rank_of(const IntMat& m) {
    RatMat r = to_rat_mat(m);
    return rref(r).size();
}

// Primitive integer basis of the rational right kernel {x : m x = 0}.
inline IntMat rational_kernel(const IntMat& m, std::size_t cols) {
    RatMat r = to_rat_mat(m);
    std::vector<std::size_t> pivots = rref(r);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    IntMat basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec x(cols, Rat(0));
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            x[pivots[i]] = i < r.size() ? -r[i][free] : Rat(0);
        basis.push_back(primitive_from_rat(x));
    }
    return basis;
}

// Any rational solution of m x = b, if one exists.
inline std::optional<RatVec> solve_rational(const IntMat& m, const IntVec& b) {
    std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    RatMat aug(rows, RatVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = Rat(m[i][j]);
        aug[i][cols] = Rat(b[i]);
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;  // 0 = 1 row
    RatVec x(cols, Rat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

// Determinant by Bareiss fraction-free elimination.
inline Int det(IntMat m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t sel = k + 1;
            while (sel < n && m[sel][k] == 0) ++sel;
            if (sel == n) return 0;
            std::swap(m[sel], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// Hermite and Smith normal forms
// ---------------------------------------------------------------------------

struct HnfResult {
    IntMat h;                         // row HNF of the input
    IntMat u;                         // unimodular, u * input = h
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

// Row-style Hermite normal form: pivots positive and strictly to the right as
// rows descend, entries above each pivot reduced into [0, pivot).
inline HnfResult hnf(const IntMat& a) {
    HnfResult res;
    res.h = a;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    res.u = identity_mat(rows);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        // euclidean reduction of the column below `row`
        while (true) {
            std::size_t sel = rows;
            for (std::size_t i = row; i < rows; ++i) {
                if (res.h[i][col] == 0) continue;
                if (sel == rows || cmp_abs(res.h[i][col], res.h[sel][col]) < 0) sel = i;
            }
            if (sel == rows) break;
            std::swap(res.h[sel], res.h[row]);
            std::swap(res.u[sel], res.u[row]);
            bool clean = true;
            for (std::size_t i = row + 1; i < rows; ++i) {
                if (res.h[i][col] == 0) continue;
                Int q = floor_div(res.h[i][col], res.h[row][col]);
                for (std::size_t j = 0; j < cols; ++j) res.h[i][j] -= q * res.h[row][j];
                for (std::size_t j = 0; j < rows; ++j) res.u[i][j] -= q * res.u[row][j];
                if (res.h[i][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (res.h[row][col] == 0) continue;
        if (res.h[row][col] < 0) {
            for (Int& x : res.h[row]) x = -x;
            for (Int& x : res.u[row]) x = -x;
        }
        for (std::size_t i = 0; i < row; ++i) {
            Int q = floor_div(res.h[i][col], res.h[row][col]);
            if (q == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) res.h[i][j] -= q * res.h[row][j];
            for (std::size_t j = 0; j < rows; ++j) res.u[i][j] -= q * res.u[row][j];
        }
        res.pivots.push_back(col);
        ++row;
    }
    return res;
}

inline IntMat hnf_form(const IntMat& a) { return hnf(a).h; }

// Nonzero rows of the HNF: canonical basis of the row lattice.
inline IntMat hnf_row_basis(const IntMat& a) {
    HnfResult r = hnf(a);
    IntMat basis(r.h.begin(), r.h.begin() + static_cast<long>(r.pivots.size()));
    return basis;
}

struct SnfResult {
    IntMat d;  // diagonal, d1 | d2 | ...
    IntMat u;  // unimodular row transform
    IntMat v;  // unimodular column transform, u * input * v = d
};

inline SnfResult snf(const IntMat& a) {
    SnfResult res;
    res.d = a;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    res.u = identity_mat(rows);
    res.v = identity_mat(cols);

    auto row_op = [&](std::size_t i, std::size_t k, const Int& q) {  // row i -= q * row k
        for (std::size_t j = 0; j < cols; ++j) res.d[i][j] -= q * res.d[k][j];
        for (std::size_t j = 0; j < rows; ++j) res.u[i][j] -= q * res.u[k][j];
    };
    auto col_op = [&](std::size_t j, std::size_t k, const Int& q) {  // col j -= q * col k
        for (std::size_t i = 0; i < rows; ++i) res.d[i][j] -= q * res.d[i][k];
        for (std::size_t i = 0; i < cols; ++i) res.v[i][j] -= q * res.v[i][k];
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // locate a nonzero pivot of minimal absolute value in the remaining block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (res.d[i][j] == 0) continue;
                if (pi == rows || cmp_abs(res.d[i][j], res.d[pi][pj]) < 0) { pi = i; pj = j; }
            }
        if (pi == rows) break;
        std::swap(res.d[pi], res.d[t]);
        std::swap(res.u[pi], res.u[t]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(res.d[i][pj], res.d[i][t]);
        for (std::size_t i = 0; i < cols; ++i) std::swap(res.v[i][pj], res.v[i][t]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (res.d[i][t] == 0) continue;
                Int q = floor_div(res.d[i][t], res.d[t][t]);
                row_op(i, t, q);
                if (res.d[i][t] != 0) { std::swap(res.d[i], res.d[t]); std::swap(res.u[i], res.u[t]); dirty = true; }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (res.d[t][j] == 0) continue;
                Int q = floor_div(res.d[t][j], res.d[t][t]);
                col_op(j, t, q);
                if (res.d[t][j] != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(res.d[i][j], res.d[i][t]);
                    for (std::size_t i = 0; i < cols; ++i) std::swap(res.v[i][j], res.v[i][t]);
                    dirty = true;
                }
            }
        }
        // enforce divisibility d_t | d[i][j] for the rest of the block
        bool redo = false;
        for (std::size_t i = t + 1; i < rows && !redo; ++i)
            for (std::size_t j = t + 1; j < cols && !redo; ++j) {
                Int r;
                mpz_fdiv_r(r.get_mpz_t(), res.d[i][j].get_mpz_t(), res.d[t][t].get_mpz_t());
                if (r != 0) {
                    row_op(t, i, Int(-1));  // add row i to row t, then restart this pivot
                    redo = true;
                }
            }
        if (redo) continue;
        if (res.d[t][t] < 0) {
            for (std::size_t i = 0; i < rows; ++i) res.d[i][t] = -res.d[i][t];
            for (std::size_t i = 0; i < cols; ++i) res.v[i][t] = -res.v[i][t];
        }
        ++t;
    }
    return res;
}

inline IntVec snf_diagonal(const IntMat& a) {
    SnfResult s = snf(a);
    std::size_t n = std::min(s.d.size(), s.d.empty() ? std::size_t(0) : s.d[0].size());
    IntVec diag(n);
    for (std::size_t i = 0; i < n; ++i) diag[i] = s.d[i][i];
    return diag;
}

// Saturated basis of the integer right kernel {x in Z^cols : a x = 0},
// rows HNF-canonicalized.
inline IntMat integer_kernel(const IntMat& a, std::size_t cols) {
    if (a.empty()) return identity_mat(cols);
    SnfResult s = snf(a);
    std::size_t r = 0;
    while (r < std::min(s.d.size(), cols) && s.d[r][r] != 0) ++r;
    IntMat basis;
    for (std::size_t j = r; j < cols; ++j) {
        IntVec col(cols);
        for (std::size_t i = 0; i < cols; ++i) col[i] = s.v[i][j];
        basis.push_back(col);
    }
    return basis.empty() ? basis : hnf_row_basis(basis);
}

// True when the rows span a saturated sublattice of Z^cols (all invariant
// factors are 1).
inline bool rows_saturated(const IntMat& m) {
    if (m.empty()) return true;
    IntVec diag = snf_diagonal(m);
    std::size_t r = rank_of(m);
    if (r != m.size()) return false;
    for (std::size_t i = 0; i < r; ++i)
        if (diag[i] != 1) return false;
    return true;
}

// Saturation of the row span: canonical basis of span_Q(rows) ∩ Z^cols.
inline IntMat saturate_rows(const IntMat& m, std::size_t cols) {
    IntMat orth = integer_kernel(m, cols);
    return integer_kernel(orth, cols);
}

// Integer solution of a x = b, if one exists.
inline std::optional<IntVec> solve_integer(const IntMat& a, const IntVec& b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    if (cols == 0) return is_zero(b) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
    // rows of h = hnf(a^T) are an echelon basis of the lattice spanned by the
    // columns of a; solve y h = b, then x = u^T y.
    HnfResult r = hnf(transpose(a));
    IntVec y(cols, Int(0));
    IntVec rem = b;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        std::size_t p = r.pivots[i];
        Int q = rem[p] / r.h[i][p];
        if (rem[p] % r.h[i][p] != 0) return std::nullopt;
        y[i] = q;
        for (std::size_t j = 0; j < rows; ++j) rem[j] -= q * r.h[i][j];
    }
    if (!is_zero(rem)) return std::nullopt;
    IntVec x(cols, Int(0));
    for (std::size_t i = 0; i < cols; ++i)
        for (std::size_t j = 0; j < cols; ++j) x[i] += r.u[j][i] * y[j];
    return x;
}

// Integer right inverse r with a r = identity; exists iff a is surjective
// as a map Z^cols -> Z^rows.
inline std::optional<IntMat> right_inverse(const IntMat& a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    IntMat r(cols, IntVec(rows, Int(0)));
    for (std::size_t k = 0; k < rows; ++k) {
        std::optional<IntVec> x = solve_integer(a, unit_vec(rows, k));
        if (!x) return std::nullopt;
        for (std::size_t i = 0; i < cols; ++i) r[i][k] = (*x)[i];
    }
    return r;
}

// Unimodular u with u * q = q2, if the two rank-deficient-free matrices have
// the same row lattice.
inline std::optional<IntMat> unimodular_row_transform(const IntMat& q, const IntMat& q2) {
    if (q.size() != q2.size()) return std::nullopt;
    std::size_t k = q.size();
    IntMat u(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::optional<IntVec> x = solve_integer(transpose(q), q2[i]);
        if (!x) return std::nullopt;
        u[i] = *x;
    }
    Int d = det(u);
    if (d != 1 && d != -1) return std::nullopt;
    if (mat_mul(u, q) != q2) return std::nullopt;
    return u;
}

inline RatMat inverse_rational(const IntMat& a) {
    std::size_t n = a.size();
    RatMat aug(n, RatVec(2 * n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rat(a[i][j]);
        aug[i][n + i] = 1;
    }
    std::vector<std::size_t> pivots = rref(aug);
    if (pivots.size() != n) throw PreconditionError("inverse_rational: singular matrix");
    RatMat inv(n, RatVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace cytoric
