#pragma once

#include "arith.hpp"

namespace cytoric {

// Exact phase-one simplex with Bland's rule: decides whether a x = b has a
// solution with x >= 0. Solves the auxiliary LP min sum(s) over
// [a | I] (x,s) = b', s artificial, with all arithmetic over Q.
// Sizes here are tiny, so no effort is spent on speed.
inline bool nonnegative_solution_exists(const IntMat& a, const IntVec& b) {
    std::size_t m = a.size();
    std::size_t n = m ? a[0].size() : 0;
    if (m == 0) return true;

    std::size_t total = n + m;  // columns: x vars, then artificials
    RatMat t(m, RatVec(total + 1, Rat(0)));
    for (std::size_t i = 0; i < m; ++i) {
        int sign = b[i] < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = Rat(sign * a[i][j]);
        t[i][n + i] = 1;
        t[i][total] = Rat(sign * b[i]);
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

    // reduced-cost row for min sum(s): obj[j] = c_j - sum_i t[i][j],
    // with c_j = 1 on artificial columns; obj[total] tracks -w.
    RatVec obj(total + 1, Rat(0));
    for (std::size_t j = 0; j < total; ++j) {
        if (j >= n) obj[j] = 1;
        for (std::size_t i = 0; i < m; ++i) obj[j] -= t[i][j];
    }
    for (std::size_t i = 0; i < m; ++i) obj[total] -= t[i][total];

    while (true) {
        std::size_t enter = total;  // Bland: smallest index with negative cost
        for (std::size_t j = 0; j < total; ++j)
            if (obj[j] < 0) { enter = j; break; }
        if (enter == total) break;
        std::size_t leave = m;
        Rat best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rat ratio = t[i][total] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == m)
            throw InternalError("phase-one simplex: unbounded auxiliary objective");
        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j <= total; ++j) t[leave][j] /= piv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        if (obj[enter] != 0) {
            Rat f = obj[enter];
            for (std::size_t j = 0; j <= total; ++j) obj[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return obj[total] == 0;  // -w at optimum
}

// Membership of v in the cone generated by gens, decided by LP feasibility.
// This is the generator-side oracle, independent of any facet description.
inline bool in_cone_hull(const IntMat& gens, const IntVec& v) {
    if (is_zero(v)) return true;
    if (gens.empty()) return false;
    return nonnegative_solution_exists(transpose(gens), v);
}

}  // namespace cytoric
