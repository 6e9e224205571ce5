#pragma once

#include "linalg.hpp"

#include <functional>
#include <map>
#include <set>

namespace cytoric {

// Inner halfspace <normal, x> >= -offset; a facet is tight on it.
struct Halfspace {
    IntVec normal;  // primitive
    Rat offset;

    bool operator<(const Halfspace& o) const {
        if (normal != o.normal) return lex_less(normal, o.normal);
        return offset < o.offset;
    }
    bool operator==(const Halfspace& o) const { return normal == o.normal && offset == o.offset; }
};

namespace detail {

inline RatVec rat_point(const IntVec& p) { return to_rat(p); }

inline RatVec vec_sub_rat(const RatVec& a, const RatVec& b) {
    RatVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline IntMat clear_denominators(const RatMat& rows) {
    IntMat out;
    for (const RatVec& r : rows) {
        Int l = 1;
        for (const Rat& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
        IntVec v(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) v[i] = r[i].get_num() * exact_div(l, r[i].get_den());
        out.push_back(v);
    }
    return out;
}

inline std::size_t affine_rank(const RatMat& pts) {
    if (pts.size() <= 1) return 0;
    RatMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub_rat(pts[i], pts[0]));
    return rank_rat(diffs);
}

}  // namespace detail

// Full-dimensional polytope with exact rational vertices. Inputs to
// from_points may contain non-extreme points; the stored vertex list keeps
// the order in which the actual vertices first appear, since downstream fan
// indexing is order-sensitive.
class Polytope {
  public:
    Polytope() : dim_(0) {}

    static Polytope from_points(std::size_t dim, const RatMat& points) {
        if (dim == 0) throw PreconditionError("polytope: zero dimension");
        Polytope p;
        p.dim_ = dim;
        RatMat pts;
        std::set<RatVec> seen;
        for (const RatVec& q : points) {
            if (q.size() != dim) throw PreconditionError("polytope: point dimension mismatch");
            if (seen.insert(q).second) pts.push_back(q);
        }
        if (detail::affine_rank(pts) != dim)
            throw DegenerateInput("polytope: points do not span the ambient space");
        p.facets_ = enumerate_facets(dim, pts);
        for (const RatVec& q : pts) {
            IntMat active;
            for (const Halfspace& h : p.facets_)
                if (dot_rat(h.normal, q) == -h.offset) active.push_back(h.normal);
            if (rank_of(active) == dim) p.verts_.push_back(q);
        }
        return p;
    }

    static Polytope from_int_points(std::size_t dim, const IntMat& points) {
        RatMat pts;
        for (const IntVec& q : points) pts.push_back(to_rat(q));
        return from_points(dim, pts);
    }

    // Vertices of {x : <h.normal, x> >= -h.offset for all h}; the result may
    // have any dimension and is not required to be full-dimensional.
    static RatMat vertex_enumeration(std::size_t dim, const std::vector<Halfspace>& hs) {
        std::set<RatVec> verts;
        std::vector<std::size_t> idx(dim);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
            if (pos == dim) {
                RatMat sys;
                RatVec rhs;
                for (std::size_t k : idx) {
                    sys.push_back(to_rat(hs[k].normal));
                    rhs.push_back(-hs[k].offset);
                }
                // solve sys x = rhs when uniquely determined
                RatMat aug = sys;
                for (std::size_t i = 0; i < dim; ++i) aug[i].push_back(rhs[i]);
                std::vector<std::size_t> piv = rref(aug);
                if (piv.size() != dim || (!piv.empty() && piv.back() == dim)) return;
                RatVec x(dim);
                for (std::size_t i = 0; i < dim; ++i) x[piv[i]] = aug[i][dim];
                for (const Halfspace& h : hs)
                    if (dot_rat(h.normal, x) < -h.offset) return;
                verts.insert(x);
                return;
            }
            for (std::size_t k = start; k + (dim - pos) <= hs.size(); ++k) {
                idx[pos] = k;
                rec(pos + 1, k + 1);
            }
        };
        if (hs.size() >= dim) rec(0, 0);
        return RatMat(verts.begin(), verts.end());
    }

    std::size_t dim() const { return dim_; }
    const RatMat& vertices() const { return verts_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    std::size_t vertex_count() const { return verts_.size(); }

    bool is_lattice() const {
        for (const RatVec& v : verts_)
            for (const Rat& q : v)
                if (!is_integer(q)) return false;
        return true;
    }

    IntMat int_vertices() const {
        if (!is_lattice()) throw PreconditionError("polytope: vertices are not integral");
        IntMat out;
        for (const RatVec& v : verts_) {
            IntVec w(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) w[i] = v[i].get_num();
            out.push_back(w);
        }
        return out;
    }

    RatMat sorted_vertices() const {
        RatMat v = verts_;
        std::sort(v.begin(), v.end(), static_cast<bool (*)(const RatVec&, const RatVec&)>(lex_less));
        return v;
    }

    bool same_polytope(const Polytope& o) const {
        return dim_ == o.dim_ && sorted_vertices() == o.sorted_vertices();
    }

    bool contains(const RatVec& x) const {
        for (const Halfspace& h : facets_)
            if (dot_rat(h.normal, x) < -h.offset) return false;
        return true;
    }

    bool contains(const IntVec& x) const { return contains(to_rat(x)); }

    bool origin_interior() const {
        for (const Halfspace& h : facets_)
            if (h.offset <= 0) return false;
        return true;
    }

    // 0-based positions of the vertices tight on each facet.
    std::vector<std::vector<std::size_t>> facet_vertex_indices() const {
        std::vector<std::vector<std::size_t>> out;
        for (const Halfspace& h : facets_) {
            std::vector<std::size_t> inc;
            for (std::size_t i = 0; i < verts_.size(); ++i)
                if (dot_rat(h.normal, verts_[i]) == -h.offset) inc.push_back(i);
            out.push_back(inc);
        }
        return out;
    }

    IntMat lattice_points() const {
        IntVec lo(dim_), hi(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Rat mn = verts_[0][j], mx = verts_[0][j];
            for (const RatVec& v : verts_) {
                if (v[j] < mn) mn = v[j];
                if (v[j] > mx) mx = v[j];
            }
            lo[j] = ceil_rat(mn);
            hi[j] = floor_rat(mx);
        }
        IntMat pts;
        IntVec cur = lo;
        while (true) {
            if (contains(cur)) pts.push_back(cur);
            std::size_t j = 0;
            while (j < dim_ && cur[j] == hi[j]) { cur[j] = lo[j]; ++j; }
            if (j == dim_) break;
            cur[j] += 1;
        }
        std::sort(pts.begin(), pts.end(), static_cast<bool (*)(const IntVec&, const IntVec&)>(lex_less));
        return pts;
    }

    // Polar polytope {u : <x,u> >= -1 for all x}; needs the origin strictly
    // inside. One vertex per facet, at normal/offset.
    Polytope polar() const {
        if (!origin_interior())
            throw PreconditionError("polar: origin is not an interior point");
        RatMat pts;
        for (const Halfspace& h : facets_) {
            RatVec u(dim_);
            for (std::size_t i = 0; i < dim_; ++i) u[i] = Rat(h.normal[i]) / h.offset;
            pts.push_back(u);
        }
        return from_points(dim_, pts);
    }

    bool is_fano() const {
        if (!is_lattice() || !origin_interior()) return false;
        for (const IntVec& v : int_vertices())
            if (!is_primitive(v)) return false;
        return true;
    }

    bool is_reflexive() const {
        if (!is_lattice() || !origin_interior()) return false;
        for (const Halfspace& h : facets_)
            if (h.offset != 1) return false;
        return true;
    }

    bool is_terminal() const {
        if (!is_lattice() || !origin_interior()) return false;
        IntMat pts = lattice_points();
        IntMat expected = int_vertices();
        expected.push_back(zero_vec(dim_));
        std::sort(expected.begin(), expected.end(),
                  static_cast<bool (*)(const IntVec&, const IntVec&)>(lex_less));
        return pts == expected;
    }

    bool is_simplicial() const {
        for (const auto& inc : facet_vertex_indices())
            if (inc.size() != dim_) return false;
        return true;
    }

    bool is_smooth() const {
        if (!is_lattice() || !origin_interior() || !is_simplicial()) return false;
        IntMat verts = int_vertices();
        for (const auto& inc : facet_vertex_indices()) {
            IntMat m;
            for (std::size_t i : inc) m.push_back(verts[i]);
            Int d = det(m);
            if (d != 1 && d != -1) return false;
        }
        return true;
    }

    // max <v,x> - min <v,x> over the polytope, for primitive v.
    Int lattice_width_along(const IntVec& v) const {
        if (is_zero(v) || !is_primitive(v))
            throw PreconditionError("lattice_width_along: direction must be primitive and nonzero");
        Rat mn = dot_rat(v, verts_[0]), mx = mn;
        for (const RatVec& p : verts_) {
            Rat s = dot_rat(v, p);
            if (s < mn) mn = s;
            if (s > mx) mx = s;
        }
        Rat w = mx - mn;
        if (!is_integer(w)) throw InternalError("lattice_width_along: non-integral width");
        return w.get_num();
    }

    // dim! * volume, computed by exact recursive triangulation.
    Rat normalized_volume() const { return normalized_volume_of(verts_, dim_); }

    static Rat normalized_volume_of(const RatMat& points, std::size_t dim);

  private:
    std::size_t dim_;
    RatMat verts_;
    std::vector<Halfspace> facets_;

    static std::vector<Halfspace> enumerate_facets(std::size_t dim, const RatMat& pts);
};

inline std::vector<Halfspace> Polytope::enumerate_facets(std::size_t dim, const RatMat& pts) {
    std::set<Halfspace> found;
    std::vector<std::size_t> idx(dim);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == dim) {
            RatMat diffs;
            for (std::size_t k = 1; k < dim; ++k)
                diffs.push_back(detail::vec_sub_rat(pts[idx[k]], pts[idx[0]]));
            IntMat int_diffs = detail::clear_denominators(diffs);
            IntMat kern = rational_kernel(int_diffs, dim);
            if (kern.size() != 1) return;  // not a hyperplane spanning subset
            IntVec u = kern[0];
            Rat c = dot_rat(u, pts[idx[0]]);
            bool above = true, below = true;
            for (const RatVec& q : pts) {
                Rat s = dot_rat(u, q);
                if (s < c) above = false;
                if (s > c) below = false;
                if (!above && !below) return;
            }
            // inner orientation: <u,x> >= -offset on the polytope
            if (above) found.insert(Halfspace{u, -c});
            else found.insert(Halfspace{vec_neg(u), c});
            return;
        }
        for (std::size_t k = start; k + (dim - pos) <= pts.size(); ++k) {
            idx[pos] = k;
            rec(pos + 1, k + 1);
        }
    };
    rec(0, 0);
    return std::vector<Halfspace>(found.begin(), found.end());
}

inline Rat Polytope::normalized_volume_of(const RatMat& points, std::size_t dim) {
    if (points.empty()) return Rat(0);
    if (detail::affine_rank(points) < dim) return Rat(0);
    if (dim == 1) {
        Rat mn = points[0][0], mx = points[0][0];
        for (const RatVec& p : points) {
            if (p[0] < mn) mn = p[0];
            if (p[0] > mx) mx = p[0];
        }
        return mx - mn;
    }
    Polytope p = from_points(dim, points);
    const RatMat& v = p.vertices();
    RatVec apex = v[0];
    Rat total = 0;
    auto incidences = p.facet_vertex_indices();
    for (std::size_t f = 0; f < p.facets().size(); ++f) {
        const Halfspace& h = p.facets()[f];
        Rat apex_height = dot_rat(h.normal, apex) + h.offset;
        if (apex_height == 0) continue;  // apex on this facet
        // facet points in affine coordinates of their hyperplane
        RatMat fpts;
        for (std::size_t i : incidences[f]) fpts.push_back(v[i]);
        RatMat diffs;
        for (std::size_t i = 1; i < fpts.size(); ++i)
            diffs.push_back(detail::vec_sub_rat(fpts[i], fpts[0]));
        IntMat dirs = detail::clear_denominators(diffs);
        IntMat basis = saturate_rows(dirs, dim);
        if (basis.size() != dim - 1) throw InternalError("normalized_volume: facet span");
        RatMat local;
        IntMat basis_t = transpose(basis);
        for (const RatVec& q : fpts) {
            RatVec rel = detail::vec_sub_rat(q, fpts[0]);
            // coordinates of rel in the saturated basis
            RatMat aug = to_rat_mat(basis_t);
            for (std::size_t i = 0; i < dim; ++i) aug[i].push_back(rel[i]);
            std::vector<std::size_t> piv = rref(aug);
            if (!piv.empty() && piv.back() == basis.size())
                throw InternalError("normalized_volume: point outside facet span");
            RatVec coords(basis.size(), Rat(0));
            for (std::size_t i = 0; i < piv.size(); ++i) coords[piv[i]] = aug[i][basis.size()];
            local.push_back(coords);
        }
        // lattice distance from the apex to the facet hyperplane is exactly
        // apex_height because h.normal is primitive and basis is saturated
        Rat fvol = normalized_volume_of(local, dim - 1);
        Rat height = apex_height > 0 ? apex_height : -apex_height;
        total += fvol * height;
    }
    return total;
}

// Intersection of the polytope with the rational span of the rows of `basis`
// (a saturated sublattice basis), expressed in basis coordinates, together
// with the image of the polar under the dual projection m -> basis * m.
struct SliceResult {
    Polytope slice;       // Δ ∩ span(basis), in basis coordinates
    Polytope polar_image; // projection of Δ° to the dual of the sublattice
};

inline SliceResult slice_and_project(const Polytope& p, const IntMat& basis) {
    if (basis.empty() || basis[0].size() != p.dim())
        throw PreconditionError("slice_and_project: bad sublattice basis");
    if (!rows_saturated(basis))
        throw PreconditionError("slice_and_project: sublattice basis is not saturated");
    std::size_t k = basis.size();
    std::vector<Halfspace> sliced;
    for (const Halfspace& h : p.facets()) {
        IntVec proj = mat_vec(basis, h.normal);
        sliced.push_back(Halfspace{proj, h.offset});
    }
    RatMat sdata = Polytope::vertex_enumeration(k, sliced);
    Polytope slice = Polytope::from_points(k, sdata);

    Polytope polar = p.polar();
    RatMat proj_pts;
    for (const RatVec& m : polar.vertices()) {
        RatVec q(k, Rat(0));
        for (std::size_t i = 0; i < k; ++i) q[i] = dot_rat(basis[i], m);
        proj_pts.push_back(q);
    }
    Polytope image = Polytope::from_points(k, proj_pts);
    return SliceResult{std::move(slice), std::move(image)};
}

}  // namespace cytoric
