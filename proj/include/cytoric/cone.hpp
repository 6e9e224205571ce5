#pragma once

#include "linalg.hpp"
#include "lp.hpp"

#include <functional>
#include <set>

namespace cytoric {

namespace detail {

// Extremal rays of {x : eq.x = 0, ineq.x >= 0}, assuming the cone is pointed.
// Every extremal ray is cut out by d-1 independent active constraints, so we
// enumerate subsets of the inequalities that complete the equations to rank
// d-1 and keep the feasible kernel directions. Throws NonPointedCone when a
// line is detected.
inline IntMat rays_from_constraints(const IntMat& eqs, const IntMat& ineqs_in, std::size_t d) {
    IntMat ineqs;
    {
        std::set<IntVec> seen;
        for (const IntVec& v : ineqs_in) {
            IntVec p = primitive_part(v);
            if (!is_zero(p) && seen.insert(p).second) ineqs.push_back(p);
        }
    }
    std::size_t base_rank = eqs.empty() ? 0 : rank_of(eqs);
    if (base_rank > d) throw InternalError("rays_from_constraints: bad equations");
    std::set<IntVec> rays;
    auto consider = [&](const IntMat& subset) {
        IntMat sys = eqs;
        sys.insert(sys.end(), subset.begin(), subset.end());
        IntMat kern = rational_kernel(sys, d);
        if (kern.size() != 1) return;
        IntVec r = kern[0];
        bool pos_ok = true, neg_ok = true;
        for (const IntVec& q : ineqs) {
            Int s = dot(q, r);
            if (s < 0) pos_ok = false;
            if (s > 0) neg_ok = false;
            if (!pos_ok && !neg_ok) return;
        }
        if (pos_ok && neg_ok) throw NonPointedCone("cone contains a line");
        rays.insert(pos_ok ? r : vec_neg(r));
    };

    if (base_rank >= d) return {};
    std::size_t need = d - 1 - base_rank;
    if (need > ineqs.size()) return {};
    std::vector<std::size_t> idx(need);
    // iterate over all `need`-subsets of the inequalities
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == need) {
            IntMat subset;
            for (std::size_t k : idx) subset.push_back(ineqs[k]);
            consider(subset);
            return;
        }
        for (std::size_t k = start; k + (need - pos) <= ineqs.size(); ++k) {
            idx[pos] = k;
            rec(pos + 1, k + 1);
        }
    };
    rec(0, 0);
    return IntMat(rays.begin(), rays.end());
}

}  // namespace detail

// Pointed rational polyhedral cone with an eagerly synchronized dual pair of
// descriptions: primitive extremal rays, facet normals (inner, >= 0 on the
// cone) and span equations (= 0 on the cone; empty iff full-dimensional).
class RationalCone {
  public:
    RationalCone() : dim_(0) {}

    static RationalCone from_generators(std::size_t dim, const IntMat& gens) {
        if (dim == 0) throw PreconditionError("cone: zero ambient dimension");
        RationalCone c;
        c.dim_ = dim;
        IntMat g;
        {
            std::set<IntVec> seen;
            for (const IntVec& v : gens) {
                if (v.size() != dim) throw PreconditionError("cone: generator dimension mismatch");
                IntVec p = primitive_part(v);
                if (!is_zero(p) && seen.insert(p).second) g.push_back(p);
            }
        }
        if (g.empty()) {  // zero cone
            c.equations_ = identity_mat(dim);
            return c;
        }
        c.equations_ = integer_kernel(g, dim);  // orthogonal complement of the span
        IntMat span_basis = c.equations_.empty() ? identity_mat(dim)
                                                 : integer_kernel(c.equations_, dim);
        std::size_t k = span_basis.size();
        // generator coordinates in the saturated span basis
        IntMat span_t = transpose(span_basis);
        IntMat coords;
        for (const IntVec& v : g) {
            std::optional<IntVec> x = solve_integer(span_t, v);
            if (!x) throw InternalError("cone: generator outside saturated span");
            coords.push_back(*x);
        }
        // facets of the full-dimensional cone inside its span = rays of its dual
        IntMat span_facets = detail::rays_from_constraints({}, coords, k);
        if (rank_of(span_facets) != k) throw NonPointedCone("cone contains a line");
        IntMat span_rays = detail::rays_from_constraints({}, span_facets, k);
        for (const IntVec& n : span_facets) {
            std::optional<IntVec> lift = solve_integer(span_basis, n);
            if (!lift) throw InternalError("cone: facet normal lift failed");
            c.facets_.push_back(primitive_part(*lift));
        }
        for (const IntVec& r : span_rays) c.rays_.push_back(primitive_part(mat_vec(span_t, r)));
        sort_rows(c.rays_);
        sort_rows(c.facets_);
        sort_rows(c.equations_);
        return c;
    }

    // Cone {x : ineq.x >= 0 for all rows}; must be pointed.
    static RationalCone from_inequalities(std::size_t dim, const IntMat& ineqs) {
        for (const IntVec& v : ineqs)
            if (v.size() != dim) throw PreconditionError("cone: inequality dimension mismatch");
        if (ineqs.empty()) throw NonPointedCone("empty inequality system describes all of space");
        IntMat rays = detail::rays_from_constraints({}, ineqs, dim);
        // With no ray found the cone is {0} unless the system is rank-deficient,
        // in which case it contains the whole kernel.
        if (rays.empty() && !rational_kernel(ineqs, dim).empty())
            throw NonPointedCone("inequality system is not pointed");
        return from_generators(dim, rays);
    }

    std::size_t ambient_dim() const { return dim_; }
    std::size_t dim() const { return dim_ - equations_.size(); }
    bool full_dimensional() const { return equations_.empty(); }
    bool is_zero_cone() const { return rays_.empty(); }
    const IntMat& rays() const { return rays_; }
    const IntMat& facet_normals() const { return facets_; }
    const IntMat& equations() const { return equations_; }

    bool contains(const IntVec& v) const {
        for (const IntVec& e : equations_)
            if (dot(e, v) != 0) return false;
        for (const IntVec& f : facets_)
            if (dot(f, v) < 0) return false;
        return true;
    }

    bool contains(const RatVec& v) const {
        for (const IntVec& e : equations_)
            if (dot_rat(e, v) != 0) return false;
        for (const IntVec& f : facets_)
            if (dot_rat(f, v) < 0) return false;
        return true;
    }

    // Relative-interior membership: inside the span, strictly off every facet.
    bool strictly_contains(const IntVec& v) const {
        if (!contains(v) || is_zero(v)) return false;
        for (const IntVec& f : facets_)
            if (dot(f, v) == 0) return false;
        return true;
    }

    bool operator==(const RationalCone& o) const {
        return dim_ == o.dim_ && rays_ == o.rays_;
    }

    RationalCone dual() const {
        if (!full_dimensional())
            throw PreconditionError("dual: cone is not full-dimensional");
        if (is_zero_cone()) throw PreconditionError("dual: zero cone");
        return from_generators(dim_, facets_);
    }

    // One subcone per facet, generated by the rays tight on its normal.
    std::vector<RationalCone> facet_cones() const {
        if (!full_dimensional() || is_zero_cone())
            throw PreconditionError("facet_cones: need a pointed full-dimensional cone");
        std::vector<RationalCone> out;
        for (const IntVec& f : facets_) {
            IntMat tight;
            for (const IntVec& r : rays_)
                if (dot(f, r) == 0) tight.push_back(r);
            RationalCone sub = from_generators(dim_, tight);
            if (sub.dim() + 1 != dim_) throw InternalError("facet_cones: facet of wrong dimension");
            out.push_back(std::move(sub));
        }
        return out;
    }

    friend RationalCone intersect(const RationalCone& a, const RationalCone& b) {
        if (a.dim_ != b.dim_) throw PreconditionError("intersect: ambient dimension mismatch");
        IntMat ineqs = a.facets_;
        ineqs.insert(ineqs.end(), b.facets_.begin(), b.facets_.end());
        IntMat eqs = a.equations_;
        eqs.insert(eqs.end(), b.equations_.begin(), b.equations_.end());
        IntMat rays = detail::rays_from_constraints(eqs, ineqs, a.dim_);
        return from_generators(a.dim_, rays);
    }

    // Membership decided on the generator side (LP), for cross-checks against
    // the facet description.
    bool contains_by_generators(const IntVec& v) const { return in_cone_hull(rays_, v); }

  private:
    std::size_t dim_;
    IntMat rays_;
    IntMat facets_;
    IntMat equations_;
};

inline RationalCone intersect_all(const std::vector<RationalCone>& cones) {
    if (cones.empty()) throw PreconditionError("intersect_all: empty list");
    RationalCone acc = cones[0];
    for (std::size_t i = 1; i < cones.size(); ++i) acc = intersect(acc, cones[i]);
    return acc;
}

}  // namespace cytoric
