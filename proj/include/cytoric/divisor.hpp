#pragma once

#include "fan.hpp"

namespace cytoric {

// Class-group grading of the Cox ring: q is an HNF-canonical saturated basis
// of the relation lattice of the vertex matrix, so its columns are the
// classes w_i of the torus-invariant prime divisors in a fixed basis of
// Cl = Z^(r-n).
struct GradingData {
    std::size_t r = 0;
    std::size_t n = 0;
    std::size_t picard_rank = 0;
    IntMat q;          // picard_rank x r
    IntMat right_inv;  // r x picard_rank, q * right_inv = identity
    std::string basis_tag = "hnf-canonical kernel basis";

    IntVec w(int i) const {  // 1-based ray index
        IntVec col(picard_rank);
        for (std::size_t k = 0; k < picard_rank; ++k) col[k] = q[k][static_cast<std::size_t>(i - 1)];
        return col;
    }

    IntVec anticanonical() const {
        IntVec s = zero_vec(picard_rank);
        for (std::size_t i = 1; i <= r; ++i) s = vec_add(s, w(static_cast<int>(i)));
        return s;
    }

    // Integer combination of ray classes.
    IntVec combination(const IntVec& coeffs) const {
        if (coeffs.size() != r) throw PreconditionError("grading: combination length mismatch");
        IntVec s = zero_vec(picard_rank);
        for (std::size_t i = 0; i < r; ++i)
            if (coeffs[i] != 0) s = vec_add(s, vec_scale(coeffs[i], w(static_cast<int>(i + 1))));
        return s;
    }

    // Curve-class coordinates of a relation vector: the pairing partner of
    // divisor classes under the standard dot product.
    IntVec curve_class(const IntVec& relation_vec) const {
        if (relation_vec.size() != r) throw PreconditionError("grading: relation length mismatch");
        return mat_vec(transpose(right_inv), relation_vec);
    }

    // Integer lift of a divisor class to ray coefficients.
    IntVec lift(const IntVec& cls) const {
        if (cls.size() != picard_rank) throw PreconditionError("grading: class length mismatch");
        return mat_vec(right_inv, cls);
    }
};

inline GradingData grading(const Polytope& p) {
    if (!p.is_smooth()) throw PreconditionError("grading: polytope must be smooth Fano");
    GradingData g;
    IntMat verts = p.int_vertices();
    g.r = verts.size();
    g.n = p.dim();
    // vertex matrix has the vertices as columns; its right kernel is the
    // relation lattice
    IntMat vmatrix = transpose(verts);
    g.q = integer_kernel(vmatrix, g.r);
    g.picard_rank = g.q.size();
    if (g.picard_rank != g.r - g.n) throw InternalError("grading: unexpected kernel rank");
    std::optional<IntMat> inv = right_inverse(g.q);
    if (!inv) throw InternalError("grading: kernel basis is not saturated");
    g.right_inv = *inv;
    return g;
}

inline GradingData grading(const FaceFan& fan) { return grading(fan.polytope()); }

// Unimodular u with u * q = q2 when the two grading matrices present the
// same lattice of relations in different bases.
inline std::optional<IntMat> classes_match_up_to_unimodular(const IntMat& q, const IntMat& q2) {
    return unimodular_row_transform(q, q2);
}

inline RationalCone eff_cone(const GradingData& g) {
    IntMat gens;
    for (std::size_t i = 1; i <= g.r; ++i) gens.push_back(g.w(static_cast<int>(i)));
    return RationalCone::from_generators(g.picard_rank, gens);
}

// Mov = intersection over i of Cone(w_1,...,w_i-hat,...,w_r).
inline RationalCone mov_cone(const GradingData& g) {
    std::vector<RationalCone> deleted;
    for (std::size_t skip = 1; skip <= g.r; ++skip) {
        IntMat gens;
        for (std::size_t i = 1; i <= g.r; ++i)
            if (i != skip) gens.push_back(g.w(static_cast<int>(i)));
        deleted.push_back(RationalCone::from_generators(g.picard_rank, gens));
    }
    return intersect_all(deleted);
}

// Nef = dual of the cone spanned by all primitive-relation curve classes.
inline RationalCone nef_cone(const GradingData& g, const std::vector<PrimitiveRelation>& rels) {
    IntMat ineqs;
    for (const PrimitiveRelation& rel : rels)
        ineqs.push_back(g.curve_class(rel.relation_vector(g.r)));
    return RationalCone::from_inequalities(g.picard_rank, ineqs);
}

struct AnticanonicalMonomial {
    IntVec dual_point;  // m in the polar polytope
    IntVec exponents;   // <m, v_i> + 1 per ray, length r
};

inline std::vector<AnticanonicalMonomial> anticanonical_monomials(const Polytope& p) {
    if (!p.is_reflexive()) throw PreconditionError("anticanonical_monomials: polytope must be reflexive");
    IntMat verts = p.int_vertices();
    std::vector<AnticanonicalMonomial> out;
    for (const IntVec& m : p.polar().lattice_points()) {
        AnticanonicalMonomial mono;
        mono.dual_point = m;
        mono.exponents.reserve(verts.size());
        for (const IntVec& v : verts) mono.exponents.push_back(dot(m, v) + 1);
        out.push_back(std::move(mono));
    }
    return out;
}

// Vanishing order of a general anticanonical section along V(x_i, x_j):
// the minimum of exp_i + exp_j over all anticanonical monomials.
inline Int pair_multiplicity(const std::vector<AnticanonicalMonomial>& monomials, int i, int j) {
    if (monomials.empty()) throw PreconditionError("pair_multiplicity: no monomials");
    bool first = true;
    Int mu = 0;
    for (const auto& m : monomials) {
        Int s = m.exponents[static_cast<std::size_t>(i - 1)] + m.exponents[static_cast<std::size_t>(j - 1)];
        if (first || s < mu) { mu = s; first = false; }
    }
    return mu;
}

// Degree-2 squarefree generators of the irrelevant ideal: pairs lying on no
// common facet, read off the facet incidences directly.
inline std::vector<std::pair<int, int>> irrelevant_codim2_components(const FaceFan& fan) {
    std::vector<std::pair<int, int>> out;
    int r = static_cast<int>(fan.ray_count());
    for (int i = 1; i <= r; ++i)
        for (int j = i + 1; j <= r; ++j) {
            bool cofacial = false;
            for (const auto& cone : fan.maximal_cones()) {
                if (std::find(cone.begin(), cone.end(), i) != cone.end() &&
                    std::find(cone.begin(), cone.end(), j) != cone.end()) {
                    cofacial = true;
                    break;
                }
            }
            if (!cofacial) out.emplace_back(i, j);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Anticanonical equation decomposition into coefficient buckets
// ---------------------------------------------------------------------------

enum class DecompCase { pair_deg1, pair_deg2, thm1_iii, thm1_iv, ex117 };

struct DecompBucket {
    std::string name;
    std::map<int, int> prefix;  // ray index (1-based) -> exponent divided out
    IntVec degree;              // class of the bucket polynomial
    std::vector<IntVec> dual_points;
    std::vector<IntVec> reduced_exponents;  // exponents minus prefix
};

struct AnticanonicalDecomposition {
    DecompCase tag;
    std::vector<int> distinguished;  // actual ray indices for template slots
    std::vector<DecompBucket> buckets;
};

namespace detail {

// Template prefixes per case, written on slots 1..4 of the distinguished rays.
inline std::vector<std::map<int, int>> decomp_template(DecompCase c) {
    switch (c) {
        case DecompCase::pair_deg1:
            return {{{1, 1}}, {{2, 1}}};
        case DecompCase::pair_deg2:
            return {{{1, 2}}, {{1, 1}, {2, 1}}, {{2, 2}}};
        case DecompCase::thm1_iii:
            return {{{1, 2}, {3, 1}}, {{1, 1}, {2, 1}}, {{2, 2}, {4, 1}}};
        case DecompCase::thm1_iv:
            return {{{1, 1}, {3, 1}}, {{1, 1}, {4, 1}}, {{2, 1}, {3, 1}}, {{2, 1}, {4, 1}}};
        case DecompCase::ex117:
            return {{{1, 2}, {3, 1}},
                    {{1, 1}, {2, 1}, {3, 1}},
                    {{1, 1}, {4, 1}},
                    {{2, 2}, {3, 1}},
                    {{2, 1}, {4, 1}}};
    }
    throw InternalError("decomp_template: unknown case");
}

inline std::size_t decomp_slots(DecompCase c) {
    switch (c) {
        case DecompCase::pair_deg1:
        case DecompCase::pair_deg2: return 2;
        default: return 4;
    }
}

}  // namespace detail

// Partition the anticanonical monomials into the coefficient buckets of the
// case's equation shape. Every monomial must match some bucket (checked, this
// is exactly the forced-divisibility statement of each case); the first
// matching bucket wins, so the partition is deterministic.
inline AnticanonicalDecomposition anticanonical_decomposition(
    const Polytope& p, const GradingData& g, DecompCase c, const std::vector<int>& assignment) {
    if (assignment.size() != detail::decomp_slots(c))
        throw PreconditionError("anticanonical_decomposition: wrong assignment size");
    AnticanonicalDecomposition d;
    d.tag = c;
    d.distinguished = assignment;
    IntVec minus_k = g.anticanonical();
    std::size_t bucket_no = 0;
    for (const auto& tmpl : detail::decomp_template(c)) {
        DecompBucket b;
        b.name = "f" + std::to_string(++bucket_no);
        IntVec deg = minus_k;
        for (const auto& [slot, e] : tmpl) {
            int ray = assignment[static_cast<std::size_t>(slot - 1)];
            b.prefix[ray] += e;
            deg = vec_sub(deg, vec_scale(Int(e), g.w(ray)));
        }
        b.degree = deg;
        d.buckets.push_back(std::move(b));
    }
    for (const AnticanonicalMonomial& m : anticanonical_monomials(p)) {
        bool placed = false;
        for (DecompBucket& b : d.buckets) {
            bool ok = true;
            for (const auto& [ray, e] : b.prefix)
                if (m.exponents[static_cast<std::size_t>(ray - 1)] < e) { ok = false; break; }
            if (!ok) continue;
            IntVec red = m.exponents;
            for (const auto& [ray, e] : b.prefix) red[static_cast<std::size_t>(ray - 1)] -= e;
            b.dual_points.push_back(m.dual_point);
            b.reduced_exponents.push_back(red);
            placed = true;
            break;
        }
        if (!placed)
            throw StructuralError("anticanonical_decomposition: monomial matches no bucket; configuration misdetected");
    }
    return d;
}

}  // namespace cytoric
