#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cytoric {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& msg) : std::runtime_error(msg) {}
};
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};
struct NonPointedCone : std::runtime_error {
    explicit NonPointedCone(const std::string& msg) : std::runtime_error(msg) {}
};
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};
struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw InternalError("exact_div: not divisible");
    return q;
}

inline Int floor_rat(const Rat& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline Int ceil_rat(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline int cmp_abs(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline IntVec int_vec(std::initializer_list<long> xs) {
    IntVec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline IntVec zero_vec(std::size_t n) { return IntVec(n, Int(0)); }

inline IntVec unit_vec(std::size_t n, std::size_t i) {
    IntVec v(n, Int(0));
    v[i] = 1;
    return v;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw InternalError("dot: size mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot_rat(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InternalError("dot_rat: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Rat dot_rat(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw InternalError("dot_rat: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline IntVec vec_scale(const Int& s, const IntVec& a) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
    return c;
}

inline IntVec vec_neg(const IntVec& a) { return vec_scale(Int(-1), a); }

inline bool is_zero(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

inline Int content(const IntVec& a) {
    Int g = 0;
    for (const Int& x : a) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Divide by the gcd of the entries; the zero vector stays zero.
inline IntVec primitive_part(const IntVec& a) {
    Int g = content(a);
    if (g == 0 || g == 1) return a;
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = exact_div(a[i], g);
    return c;
}

inline bool is_primitive(const IntVec& a) { return content(a) == 1; }

// Flip sign so the first nonzero entry is positive. Only for vectors whose
// sign carries no meaning (kernel basis vectors, equation normals).
inline IntVec canonical_sign(IntVec a) {
    for (const Int& x : a) {
        if (x < 0) {
            for (Int& y : a) y = -y;
            return a;
        }
        if (x > 0) return a;
    }
    return a;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool lex_less(const RatVec& a, const RatVec& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline RatVec to_rat(const IntVec& a) {
    RatVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

// Clear denominators and reduce to a primitive integer vector (direction).
inline IntVec primitive_from_rat(const RatVec& a) {
    Int l = 1;
    for (const Rat& q : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
    IntVec v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = a[i].get_num() * exact_div(l, a[i].get_den());
    return primitive_part(v);
}

inline IntMat identity_mat(std::size_t n) {
    IntMat m(n, IntVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMat transpose(const IntMat& m) {
    if (m.empty()) return {};
    IntMat t(m[0].size(), IntVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

inline IntVec mat_vec(const IntMat& m, const IntVec& v) {
    IntVec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.empty() || b.empty()) return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    IntMat c(n, IntVec(m, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

inline bool mat_eq(const IntMat& a, const IntMat& b) { return a == b; }

inline void sort_rows(IntMat& m) {
    std::sort(m.begin(), m.end(), [](const IntVec& a, const IntVec& b) { return lex_less(a, b); });
}

inline std::string to_string(const Int& x) { return x.get_str(); }
inline std::string to_string(const Rat& q) {
    return is_integer(q) ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace cytoric
