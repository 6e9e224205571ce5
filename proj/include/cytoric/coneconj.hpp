#pragma once

#include "classify.hpp"

namespace cytoric {

// ---------------------------------------------------------------------------
// Cone conjecture from two involutions
// ---------------------------------------------------------------------------

struct HypothesisReport {
    std::string name;
    bool passed;
    std::string detail;
};

struct ConeConjectureReport {
    bool all_passed = false;
    std::vector<HypothesisReport> hypotheses;
    RationalCone nef;
    std::vector<NefFacetInfo> facet_info;         // parallel to nef.facet_cones()
    std::vector<RationalCone> facets;
    std::optional<InvolutionAction> phi1, phi2;   // involutions of the two reflecting walls
    std::size_t wall1 = 0, wall2 = 0;             // facet indices of the reflecting walls
    IntVec fixed_ray;                              // common fixed nef ray e
};

namespace detail {

inline IntMat stack(const IntMat& a, const IntMat& b) {
    IntMat m = a;
    m.insert(m.end(), b.begin(), b.end());
    return m;
}

inline IntMat minus_identity(const IntMat& m) {
    IntMat out = m;
    for (std::size_t i = 0; i < m.size(); ++i) out[i][i] -= 1;
    return out;
}

}  // namespace detail

// Checks the hypotheses of the two-involution cone-conjecture criterion:
// (1) the two wall maps are involutions, (2) a common fixed nonzero nef ray e
// with h = phi1 phi2 unipotent and fixed space exactly R e, (3) the walls are
// the reflecting hyperplanes of the involutions, (4) exactly those two nef
// facets fail to be movable-boundary facets, the rest lie on the boundary of
// Mov(X).
inline ConeConjectureReport cone_conjecture_check(const Polytope& poly) {
    if (poly.dim() < 4)
        throw PreconditionError("cone_conjecture_check: dimension must be at least 4");
    if (!poly.is_smooth())
        throw PreconditionError("cone_conjecture_check: polytope must be smooth Fano");
    FaceFan fan = FaceFan::build(poly);
    std::vector<PrimitiveRelation> rels = all_primitive_relations(fan);
    GradingData g = grading(poly);

    ConeConjectureReport rep;
    rep.nef = nef_cone(g, rels);
    rep.facets = rep.nef.facet_cones();
    std::vector<std::size_t> fiber_facets, bad_facets;
    for (std::size_t k = 0; k < rep.facets.size(); ++k) {
        NefFacetInfo info = nef_facet_status(g, rels, rep.facets[k]);
        rep.facet_info.push_back(info);
        if (info.status == NefFacetStatus::fiber_1dim) fiber_facets.push_back(k);
        else if (info.status != NefFacetStatus::mov_facet) bad_facets.push_back(k);
    }

    bool h4 = fiber_facets.size() == 2 && bad_facets.empty();
    rep.hypotheses.push_back(
        {"two-reflecting-walls-others-movable", h4,
         std::to_string(fiber_facets.size()) + " fiber-type facets with 1-dimensional fibers, " +
             std::to_string(bad_facets.size()) + " small/divisorial facets, " +
             std::to_string(rep.facets.size()) + " facets total"});
    if (!h4) {
        rep.hypotheses.push_back({"involutions", false, "not evaluated"});
        rep.hypotheses.push_back({"reflecting-walls", false, "not evaluated"});
        rep.hypotheses.push_back({"unipotent-common-fixed-ray", false, "not evaluated"});
        return rep;
    }
    rep.wall1 = fiber_facets[0];
    rep.wall2 = fiber_facets[1];

    auto pair_of = [&](std::size_t facet_idx) {
        const PrimitiveRelation& rel = rels[rep.facet_info[facet_idx].relation_index];
        return std::make_pair(rel.collection.indices[0], rel.collection.indices[1]);
    };
    auto [a1, b1] = pair_of(rep.wall1);
    auto [a2, b2] = pair_of(rep.wall2);
    rep.phi1 = involution_action(g, rels, a1, b1);
    rep.phi2 = involution_action(g, rels, a2, b2);
    // involution_action already verified matrix^2 = I
    rep.hypotheses.push_back({"involutions", true, "both wall maps square to the identity"});

    bool h3 = true;
    std::string det3;
    for (int which : {0, 1}) {
        const InvolutionAction& act = which == 0 ? *rep.phi1 : *rep.phi2;
        const RationalCone& wall = rep.facets[which == 0 ? rep.wall1 : rep.wall2];
        IntMat fixed = integer_kernel(detail::minus_identity(act.matrix), g.picard_rank);
        if (fixed.size() != g.picard_rank - 1) {
            h3 = false;
            det3 += "wall map " + std::to_string(which + 1) + " is not a reflection; ";
            continue;
        }
        for (const IntVec& ray : wall.rays())
            if (apply_action(act.matrix, ray) != ray) {
                h3 = false;
                det3 += "wall " + std::to_string(which + 1) + " is not fixed pointwise; ";
            }
    }
    rep.hypotheses.push_back({"reflecting-walls", h3, h3 ? "each involution fixes its wall pointwise" : det3});

    bool h2 = true;
    std::string det2;
    IntMat both = detail::stack(detail::minus_identity(rep.phi1->matrix),
                                detail::minus_identity(rep.phi2->matrix));
    IntMat common = integer_kernel(both, g.picard_rank);
    if (common.size() != 1) {
        h2 = false;
        det2 = "common fixed space has dimension " + std::to_string(common.size());
    } else {
        IntVec e = primitive_part(common[0]);
        if (rep.nef.contains(e)) rep.fixed_ray = e;
        else if (rep.nef.contains(vec_neg(e))) rep.fixed_ray = vec_neg(e);
        if (rep.fixed_ray.empty()) {
            h2 = false;
            det2 = "common fixed line misses the nef cone";
        } else {
            IntMat h = mat_mul(rep.phi1->matrix, rep.phi2->matrix);
            IntMat nil = detail::minus_identity(h);
            IntMat power = identity_mat(g.picard_rank);
            for (std::size_t k = 0; k < g.picard_rank; ++k) power = mat_mul(power, nil);
            bool unipotent = true;
            for (const IntVec& row : power)
                if (!is_zero(row)) unipotent = false;
            IntMat hfix = integer_kernel(nil, g.picard_rank);
            bool fix_is_line = hfix.size() == 1 &&
                               (primitive_part(hfix[0]) == rep.fixed_ray ||
                                primitive_part(hfix[0]) == vec_neg(rep.fixed_ray));
            if (!unipotent) { h2 = false; det2 = "h = phi1 phi2 is not unipotent"; }
            else if (!fix_is_line) { h2 = false; det2 = "fixed space of h is not the line R e"; }
            else det2 = "e = " + to_string(rep.fixed_ray);
        }
    }
    rep.hypotheses.push_back({"unipotent-common-fixed-ray", h2, det2});

    rep.all_passed = h2 && h3 && h4;
    return rep;
}

// ---------------------------------------------------------------------------
// Tiling of the movable cone by chambers
// ---------------------------------------------------------------------------

struct TilingChamber {
    long word;       // position along the infinite dihedral word line
    IntMat map;      // the group element applied to Nef
    RationalCone cone;
};

struct TilingReport {
    std::vector<TilingChamber> chambers;        // ordered along the word line
    bool chambers_distinct = false;
    bool disjoint_interiors = false;
    bool adjacency_ok = false;                  // consecutive chambers share the expected wall
    bool outer_walls_movable = false;           // every non-shared wall is a translate of a mov-facet
    std::size_t frontier_walls = 0;             // dangling reflecting walls at the window ends
    std::vector<Rat> max_ray_distance;          // projective distance to [e] per chamber
    bool accumulation_monotone = false;         // distances decrease with word length beyond the core
};

// Enumerates the chambers h^k(Nef) and phi1 h^k(Nef) for |k| <= depth and
// runs the desk-scale diagnostics of the closed-union-of-cones argument.
inline TilingReport tiling_explorer(const ConeConjectureReport& rep, long depth) {
    if (!rep.all_passed)
        throw PreconditionError("tiling_explorer: cone conjecture hypotheses must hold");
    const IntMat& phi1 = rep.phi1->matrix;
    const IntMat& phi2 = rep.phi2->matrix;
    std::size_t dim = rep.nef.ambient_dim();
    IntMat h = mat_mul(phi1, phi2);
    IntMat hinv = mat_mul(phi2, phi1);

    TilingReport out;
    // word positions: s_{2k} = h^k Nef, s_{2k+1} = h^k phi1 Nef
    std::map<long, IntMat> word_map;
    IntMat pos = identity_mat(dim), negp = identity_mat(dim);
    for (long k = 0; k <= depth; ++k) {
        word_map[2 * k] = pos;
        word_map[2 * k + 1] = mat_mul(pos, phi1);
        word_map[-2 * k] = negp;
        word_map[-2 * k + 1] = mat_mul(negp, phi1);
        pos = mat_mul(pos, h);
        negp = mat_mul(negp, hinv);
    }
    for (const auto& [w, m] : word_map) {
        TilingChamber ch;
        ch.word = w;
        ch.map = m;
        ch.cone = RationalCone::from_generators(dim, apply_action_rows(m, rep.nef.rays()));
        out.chambers.push_back(std::move(ch));
    }

    std::set<IntMat> ray_sets;
    for (const auto& ch : out.chambers) ray_sets.insert(ch.cone.rays());
    out.chambers_distinct = ray_sets.size() == out.chambers.size();

    out.disjoint_interiors = true;
    for (std::size_t i = 0; i < out.chambers.size(); ++i)
        for (std::size_t j = 0; j < out.chambers.size(); ++j) {
            if (i == j) continue;
            for (const IntVec& ray : out.chambers[i].cone.rays())
                if (out.chambers[j].cone.strictly_contains(ray)) out.disjoint_interiors = false;
        }

    // walls: collect each chamber's facet ray sets, find shared ones
    std::vector<std::vector<IntMat>> walls(out.chambers.size());
    for (std::size_t i = 0; i < out.chambers.size(); ++i)
        for (const RationalCone& f : out.chambers[i].cone.facet_cones())
            walls[i].push_back(f.rays());
    auto shared_with_someone = [&](std::size_t i, const IntMat& wall) {
        for (std::size_t j = 0; j < out.chambers.size(); ++j) {
            if (j == i) continue;
            for (const IntMat& w : walls[j])
                if (w == wall) return true;
        }
        return false;
    };

    // expected movable walls: images of the mov-facet facets of Nef
    std::set<IntMat> mov_wall_images;
    for (std::size_t k = 0; k < rep.facets.size(); ++k) {
        if (rep.facet_info[k].status != NefFacetStatus::mov_facet) continue;
        for (const auto& ch : out.chambers) {
            IntMat img;
            for (const IntVec& ray : rep.facets[k].rays())
                img.push_back(primitive_part(apply_action(ch.map, ray)));
            sort_rows(img);
            mov_wall_images.insert(img);
        }
    }

    out.adjacency_ok = true;
    for (std::size_t i = 0; i + 1 < out.chambers.size(); ++i) {
        RationalCone common = intersect(out.chambers[i].cone, out.chambers[i + 1].cone);
        if (common.dim() + 1 != dim) { out.adjacency_ok = false; continue; }
        bool found = false;
        for (const IntMat& w : walls[i])
            if (w == common.rays()) found = true;
        if (!found) out.adjacency_ok = false;
    }

    out.outer_walls_movable = true;
    out.frontier_walls = 0;
    for (std::size_t i = 0; i < out.chambers.size(); ++i) {
        for (const IntMat& wall : walls[i]) {
            if (shared_with_someone(i, wall)) continue;
            if (mov_wall_images.count(wall)) continue;
            // a dangling reflecting wall can only sit at the two window ends
            if (i == 0 || i + 1 == out.chambers.size()) ++out.frontier_walls;
            else out.outer_walls_movable = false;
        }
    }

    // projective accumulation toward [e]: squared-sine distance is rational
    const IntVec& e = rep.fixed_ray;
    Int ee = dot(e, e);
    auto distance = [&](const IntVec& r) {
        Int re = dot(r, e), rr = dot(r, r);
        Int num = rr * ee - re * re;
        Int den = rr * ee;
        return make_rat(num, den);
    };
    for (const auto& ch : out.chambers) {
        Rat mx = 0;
        for (const IntVec& r : ch.cone.rays()) {
            Rat d = distance(r);
            if (d > mx) mx = d;
        }
        out.max_ray_distance.push_back(mx);
    }
    out.accumulation_monotone = true;
    // beyond the central chambers the maximal distance must not increase
    for (std::size_t i = 0; i + 1 < out.chambers.size(); ++i) {
        long w0 = out.chambers[i].word, w1 = out.chambers[i + 1].word;
        if (w1 >= 2 && w1 > w0 && out.max_ray_distance[i + 1] > out.max_ray_distance[i])
            out.accumulation_monotone = false;
        if (w0 <= -1 && w1 > w0 && out.max_ray_distance[i] > out.max_ray_distance[i + 1])
            out.accumulation_monotone = false;
    }
    return out;
}

// ---------------------------------------------------------------------------
// The product family P^1 x P(O + O(i)) over P^(n-2)
// ---------------------------------------------------------------------------

// Vertices e_1..e_n, -e_1-...-e_(n-2)+i e_n, -e_(n-1), -e_n; smooth Fano of
// Picard rank 3 for 0 <= i <= n-2.
inline Polytope family_polytope(std::size_t n, std::size_t i) {
    if (n < 3) throw PreconditionError("family_polytope: dimension must be at least 3");
    if (i > n - 2) throw PreconditionError("family_polytope: twist must satisfy 0 <= i <= n-2");
    IntMat pts;
    for (std::size_t k = 0; k < n; ++k) pts.push_back(unit_vec(n, k));
    IntVec v(n, Int(0));
    for (std::size_t k = 0; k + 2 < n; ++k) v[k] = -1;
    v[n - 1] = Int(static_cast<long>(i));
    pts.push_back(v);
    IntVec w(n, Int(0));
    w[n - 2] = -1;
    pts.push_back(w);
    IntVec u(n, Int(0));
    u[n - 1] = -1;
    pts.push_back(u);
    return Polytope::from_int_points(n, pts);
}

// (P^1)^m: the cross-polytope with vertices ±e_k.
inline Polytope product_of_p1(std::size_t m) {
    IntMat pts;
    for (std::size_t k = 0; k < m; ++k) {
        pts.push_back(unit_vec(m, k));
        IntVec v(m, Int(0));
        v[k] = -1;
        pts.push_back(v);
    }
    return Polytope::from_int_points(m, pts);
}

}  // namespace cytoric
