#pragma once

#include "cone.hpp"
#include "polytope.hpp"

namespace cytoric {

// Vertex indices are 1-based throughout the fan layer, matching the labels
// v_1,...,v_r of the input data.

struct PrimitiveCollection {
    std::vector<int> indices;  // sorted, 1-based

    bool operator<(const PrimitiveCollection& o) const {
        if (indices.size() != o.indices.size()) return indices.size() < o.indices.size();
        return indices < o.indices;
    }
    bool operator==(const PrimitiveCollection& o) const { return indices == o.indices; }
    bool is_pair() const { return indices.size() == 2; }
};

struct PrimitiveRelation {
    PrimitiveCollection collection;
    std::map<int, Int> rhs;  // 1-based vertex index -> positive coefficient
    Int degree;              // |collection| - sum of rhs coefficients

    // +1 on the collection, -c_j on the right-hand side, as a vector in Z^r.
    IntVec relation_vector(std::size_t r) const {
        IntVec v = zero_vec(r);
        for (int i : collection.indices) v[static_cast<std::size_t>(i - 1)] += 1;
        for (const auto& [j, c] : rhs) v[static_cast<std::size_t>(j - 1)] -= c;
        return v;
    }
    bool is_pair() const { return collection.is_pair(); }
};

class FaceFan {
  public:
    // Face fan of a Fano polytope: one maximal cone per facet. The relation
    // machinery below needs smoothness; pass require_smooth=false only for
    // the purely fan-level checks (projection morphisms on simplicial input).
    static FaceFan build(const Polytope& p, bool require_smooth = true) {
        if (!p.is_fano())
            throw PreconditionError("face_fan: polytope is not Fano (interior origin, primitive lattice vertices)");
        FaceFan f;
        f.poly_ = p;
        f.verts_ = p.int_vertices();
        f.simplicial_ = p.is_simplicial();
        f.smooth_ = p.is_smooth();
        if (require_smooth && !f.smooth_)
            throw PreconditionError("face_fan: polytope is not smooth");
        for (const auto& inc : p.facet_vertex_indices()) {
            std::vector<int> cone;
            for (std::size_t i : inc) cone.push_back(static_cast<int>(i + 1));
            f.max_cones_.push_back(cone);
        }
        std::sort(f.max_cones_.begin(), f.max_cones_.end());
        std::vector<bool> used(f.verts_.size(), false);
        for (const auto& c : f.max_cones_) {
            if (f.simplicial_ && c.size() != f.dim())
                throw InternalError("face_fan: simplicial cone of wrong size");
            for (int i : c) used[static_cast<std::size_t>(i - 1)] = true;
        }
        if (!std::all_of(used.begin(), used.end(), [](bool b) { return b; }))
            throw InternalError("face_fan: vertex missing from all cones");
        return f;
    }

    const Polytope& polytope() const { return poly_; }
    const IntMat& vertices() const { return verts_; }
    std::size_t dim() const { return poly_.dim(); }
    std::size_t ray_count() const { return verts_.size(); }
    const std::vector<std::vector<int>>& maximal_cones() const { return max_cones_; }
    bool smooth() const { return smooth_; }
    bool simplicial() const { return simplicial_; }

    const IntVec& vertex(int i) const { return verts_[static_cast<std::size_t>(i - 1)]; }

    bool is_face(const std::vector<int>& indices) const {
        for (const auto& cone : max_cones_) {
            if (std::includes(cone.begin(), cone.end(), indices.begin(), indices.end()))
                return true;
        }
        return false;
    }

    // The unique minimal cone of the (complete, simplicial) fan containing p,
    // as its generating vertex-index set; empty for p = 0.
    std::vector<int> minimal_cone_containing(const IntVec& p) const {
        if (!simplicial_) throw PreconditionError("minimal_cone_containing: fan must be simplicial");
        if (is_zero(p)) return {};
        std::vector<int> support;
        bool found = false;
        for (const auto& cone : max_cones_) {
            IntMat cols;  // vertices of the cone as matrix columns
            for (int i : cone) cols.push_back(vertex(i));
            std::optional<RatVec> sol = solve_rational(transpose(cols), p);
            if (!sol) continue;
            bool nonneg = std::all_of(sol->begin(), sol->end(), [](const Rat& c) { return c >= 0; });
            if (!nonneg) continue;
            std::vector<int> sup;
            for (std::size_t k = 0; k < cone.size(); ++k)
                if ((*sol)[k] > 0) sup.push_back(cone[k]);
            if (found && sup != support)
                throw InternalError("minimal_cone_containing: ambiguous support");
            support = sup;
            found = true;
        }
        if (!found) throw InternalError("minimal_cone_containing: point escaped the complete fan");
        return support;
    }

  private:
    Polytope poly_;
    IntMat verts_;
    std::vector<std::vector<int>> max_cones_;
    bool smooth_ = false;
    bool simplicial_ = false;
};

// Minimal non-faces of the vertex complex, sorted canonically.
inline std::vector<PrimitiveCollection> primitive_collections(const FaceFan& fan) {
    if (!fan.simplicial())
        throw PreconditionError("primitive_collections: fan must be simplicial");
    std::size_t r = fan.ray_count();
    if (r > 24) throw PreconditionError("primitive_collections: too many vertices");
    std::vector<PrimitiveCollection> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << r); ++mask) {
        if (__builtin_popcountll(mask) < 2) continue;
        std::vector<int> s;
        for (std::size_t i = 0; i < r; ++i)
            if (mask & (std::uint64_t(1) << i)) s.push_back(static_cast<int>(i + 1));
        if (fan.is_face(s)) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
            std::vector<int> sub;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != drop) sub.push_back(s[k]);
            if (!fan.is_face(sub)) minimal = false;
        }
        if (minimal) out.push_back(PrimitiveCollection{s});
    }
    std::sort(out.begin(), out.end());
    return out;
}

// The unique expression of the collection's vertex sum inside its minimal
// containing cone, with the anticanonical degree.
inline PrimitiveRelation primitive_relation(const FaceFan& fan, const PrimitiveCollection& pc) {
    if (!fan.smooth()) throw PreconditionError("primitive_relation: fan must be smooth");
    IntVec sum = zero_vec(fan.dim());
    for (int i : pc.indices) sum = vec_add(sum, fan.vertex(i));
    PrimitiveRelation rel;
    rel.collection = pc;
    std::vector<int> support = fan.minimal_cone_containing(sum);
    if (!support.empty()) {
        IntMat cols;
        for (int i : support) cols.push_back(fan.vertex(i));
        std::optional<RatVec> sol = solve_rational(transpose(cols), sum);
        if (!sol) throw InternalError("primitive_relation: unsolvable support system");
        for (std::size_t k = 0; k < support.size(); ++k) {
            const Rat& c = (*sol)[k];
            if (!is_integer(c) || c <= 0)
                throw InternalError("primitive_relation: non-positive or non-integral coefficient");
            rel.rhs[support[k]] = c.get_num();
        }
    }
    Int csum = 0;
    for (const auto& [j, c] : rel.rhs) csum += c;
    rel.degree = Int(static_cast<long>(pc.indices.size())) - csum;
    if (rel.degree < 1)
        throw InternalError("primitive_relation: non-positive degree on Fano input");
    return rel;
}

inline std::vector<PrimitiveRelation> all_primitive_relations(const FaceFan& fan) {
    std::vector<PrimitiveRelation> rels;
    for (const PrimitiveCollection& pc : primitive_collections(fan))
        rels.push_back(primitive_relation(fan, pc));
    return rels;
}

inline std::vector<PrimitiveRelation> primitive_pairs(const std::vector<PrimitiveRelation>& rels) {
    std::vector<PrimitiveRelation> pairs;
    for (const auto& r : rels)
        if (r.is_pair()) pairs.push_back(r);
    return pairs;
}

// Extremality of one relation vector inside the cone spanned by all of them:
// extremal iff it is not a nonnegative combination of the others (positive
// multiples of itself excluded). Exact LP feasibility.
inline bool is_extremal(const std::vector<PrimitiveRelation>& rels, std::size_t target,
                        std::size_t ray_count) {
    IntVec t = rels[target].relation_vector(ray_count);
    IntVec tp = primitive_part(t);
    IntMat others;
    for (std::size_t j = 0; j < rels.size(); ++j) {
        if (j == target) continue;
        IntVec v = rels[j].relation_vector(ray_count);
        if (primitive_part(v) == tp) continue;
        others.push_back(v);
    }
    return !in_cone_hull(others, t);
}

struct ProjectionCheck {
    bool is_fan_morphism;
    std::vector<std::vector<int>> offending_cones;  // 1-based index sets
};

// Whether the quotient along the degree-2 direction v maps every cone of the
// face fan of Δ into a cone of the face fan of the projected polytope.
inline ProjectionCheck check_projection_fan_map(const Polytope& p, int v_index) {
    IntMat verts = p.int_vertices();
    std::size_t n = p.dim();
    const IntVec& v = verts[static_cast<std::size_t>(v_index - 1)];
    IntVec neg = vec_neg(v);
    bool has_opposite = std::find(verts.begin(), verts.end(), neg) != verts.end();
    if (!has_opposite)
        throw PreconditionError("check_projection_fan_map: -v must also be a vertex");

    // projection N -> N/<v>: rows 2..n of a unimodular U with U v = ±e_1
    IntMat col(v.size(), IntVec(1));
    for (std::size_t i = 0; i < v.size(); ++i) col[i][0] = v[i];
    SnfResult s = snf(col);
    if (s.d[0][0] != 1) throw PreconditionError("check_projection_fan_map: v must be primitive");
    IntMat proj(s.u.begin() + 1, s.u.end());

    FaceFan fan = FaceFan::build(p, /*require_smooth=*/false);
    IntMat images;
    for (const IntVec& w : verts) images.push_back(mat_vec(proj, w));
    Polytope projected = Polytope::from_points(n - 1, to_rat_mat(images));
    std::vector<RationalCone> target_cones;
    for (const auto& inc : projected.facet_vertex_indices()) {
        IntMat gens;
        for (std::size_t i : inc) gens.push_back(projected.int_vertices()[i]);
        target_cones.push_back(RationalCone::from_generators(n - 1, gens));
    }

    ProjectionCheck res;
    res.is_fan_morphism = true;
    for (const auto& cone : fan.maximal_cones()) {
        bool mapped = false;
        for (const RationalCone& tc : target_cones) {
            bool all_in = true;
            for (int i : cone)
                if (!tc.contains(images[static_cast<std::size_t>(i - 1)])) { all_in = false; break; }
            if (all_in) { mapped = true; break; }
        }
        if (!mapped) {
            res.is_fan_morphism = false;
            res.offending_cones.push_back(cone);
        }
    }
    return res;
}

}  // namespace cytoric
