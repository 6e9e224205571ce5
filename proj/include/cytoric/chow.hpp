#pragma once

#include "divisor.hpp"

#include <mutex>

namespace cytoric {

// Exact intersection numbers of torus-invariant divisors on the smooth
// complete toric variety of a face fan. Cycles are reduced one divisor at a
// time: transversal factors extend the current cone, repeated factors are
// replaced by a linearly equivalent combination supported off the cone.
class ChowRing {
  public:
    explicit ChowRing(const FaceFan& fan) : fan_(fan) {
        if (!fan.smooth()) throw PreconditionError("chow: fan must be smooth");
    }

    const FaceFan& fan() const { return fan_; }

    // Invariant cycles: face index set (sorted, 1-based) -> coefficient.
    using Cycle = std::map<std::vector<int>, Int>;

    // Multiply the cycle by the divisor sum_i coeffs[i-1] * D_i.
    Cycle multiply(const Cycle& cycle, const IntVec& coeffs) const {
        std::size_t r = fan_.ray_count();
        if (coeffs.size() != r) throw PreconditionError("chow: divisor coefficient length mismatch");
        Cycle out;
        for (const auto& [sigma, c] : cycle) {
            for (std::size_t iz = 0; iz < r; ++iz) {
                if (coeffs[iz] == 0) continue;
                int i = static_cast<int>(iz + 1);
                bool inside = std::binary_search(sigma.begin(), sigma.end(), i);
                if (!inside) {
                    std::vector<int> ext = insert_sorted(sigma, i);
                    if (fan_.is_face(ext)) out[ext] += c * coeffs[iz];
                    continue;
                }
                // moving step: pick m with <m, v_i> = -1 and <m, v_k> = 0 on
                // the other generators of the least maximal cone containing
                // sigma, then D_i ~ D_i + div(chi^m) is supported off sigma
                std::vector<int> big = least_containing_max_cone(sigma);
                IntVec m = moving_vector(big, i);
                for (std::size_t kz = 0; kz < r; ++kz) {
                    int k = static_cast<int>(kz + 1);
                    if (std::binary_search(sigma.begin(), sigma.end(), k)) continue;
                    Int a = dot(m, fan_.vertex(k));
                    if (a == 0) continue;
                    std::vector<int> ext = insert_sorted(sigma, k);
                    if (fan_.is_face(ext)) out[ext] += c * coeffs[iz] * a;
                }
            }
        }
        for (auto it = out.begin(); it != out.end();)
            it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    // Product of n divisors given by ray coefficient vectors.
    Int intersection_of_divisors(const std::vector<IntVec>& divisors) const {
        if (divisors.size() != fan_.dim())
            throw PreconditionError("chow: need exactly dim-many divisors");
        Cycle cycle;
        cycle[{}] = 1;
        for (const IntVec& d : divisors) cycle = multiply(cycle, d);
        Int total = 0;
        for (const auto& [sigma, c] : cycle) {
            if (sigma.size() != fan_.dim()) throw InternalError("chow: cycle of wrong codimension");
            total += c;  // each smooth maximal cone is a reduced point
        }
        return total;
    }

    // Product of n prime divisors given as a multiset of ray indices.
    Int intersection_number(std::vector<int> rays) const {
        if (rays.size() != fan_.dim())
            throw PreconditionError("chow: ray multiset size must equal the dimension");
        std::sort(rays.begin(), rays.end());
        for (int i : rays)
            if (i < 1 || i > static_cast<int>(fan_.ray_count()))
                throw PreconditionError("chow: ray index out of range");
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = cache_.find(rays);
            if (it != cache_.end()) return it->second;
        }
        std::vector<IntVec> divisors;
        for (int i : rays) divisors.push_back(unit_vec(fan_.ray_count(), static_cast<std::size_t>(i - 1)));
        Int val = intersection_of_divisors(divisors);
        std::lock_guard<std::mutex> lock(mu_);
        cache_[rays] = val;
        return val;
    }

    // Multilinear extension to divisor classes via integer lifts; the result
    // does not depend on the chosen lifts.
    Int intersection_of_classes(const GradingData& g, const std::vector<IntVec>& classes) const {
        std::vector<IntVec> divisors;
        for (const IntVec& cls : classes) divisors.push_back(g.lift(cls));
        return intersection_of_divisors(divisors);
    }

    // q_A = (A^(n-3) . X . omega_i . omega_j) with X the anticanonical class:
    // the intersection form of the surface section cut out by X and n-3
    // general members of |A|.
    IntMat q_matrix(const GradingData& g, const IntVec& a_class,
                    const std::vector<IntVec>& omegas) const {
        std::size_t n = fan_.dim();
        if (n < 3) throw PreconditionError("q_matrix: dimension must be at least 3");
        if (omegas.empty()) throw PreconditionError("q_matrix: need at least one class");
        IntVec minus_k = g.anticanonical();
        std::size_t s = omegas.size();
        IntMat q(s, IntVec(s));
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i; j < s; ++j) {
                std::vector<IntVec> factors(n - 3, a_class);
                factors.push_back(minus_k);
                factors.push_back(omegas[i]);
                factors.push_back(omegas[j]);
                q[i][j] = intersection_of_classes(g, factors);
                q[j][i] = q[i][j];
            }
        return q;
    }

  private:
    const FaceFan& fan_;
    mutable std::map<std::vector<int>, Int> cache_;
    mutable std::mutex mu_;

    static std::vector<int> insert_sorted(const std::vector<int>& s, int i) {
        std::vector<int> out = s;
        out.insert(std::upper_bound(out.begin(), out.end(), i), i);
        return out;
    }

    // Lexicographically least maximal cone containing sigma.
    std::vector<int> least_containing_max_cone(const std::vector<int>& sigma) const {
        for (const auto& cone : fan_.maximal_cones())
            if (std::includes(cone.begin(), cone.end(), sigma.begin(), sigma.end())) return cone;
        throw InternalError("chow: cycle cone is not a face");
    }

    // m with <m, v_i> = -1 and <m, v_k> = 0 for the other generators of the
    // maximal cone; unique and integral by smoothness.
    IntVec moving_vector(const std::vector<int>& max_cone, int i) const {
        IntMat rows;
        IntVec target;
        for (int k : max_cone) {
            rows.push_back(fan_.vertex(k));
            target.push_back(k == i ? Int(-1) : Int(0));
        }
        std::optional<RatVec> sol = solve_rational(rows, target);
        if (!sol) throw InternalError("chow: moving vector system unsolvable");
        IntVec m(sol->size());
        for (std::size_t k = 0; k < sol->size(); ++k) {
            if (!is_integer((*sol)[k])) throw InternalError("chow: non-integral moving vector");
            m[k] = (*sol)[k].get_num();
        }
        return m;
    }
};

// Exact negative-semidefiniteness via principal minors of -q (all of them,
// not only the leading ones), plus the rank. "Nontrivial" means rank > 0.
inline std::pair<bool, std::size_t> is_negative_semidefinite_nontrivial(const IntMat& q) {
    std::size_t s = q.size();
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (q[i][j] != q[j][i]) throw PreconditionError("nsd: matrix is not symmetric");
    bool nsd = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << s) && nsd; ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < s; ++i)
            if (mask & (std::uint64_t(1) << i)) idx.push_back(i);
        IntMat minor(idx.size(), IntVec(idx.size()));
        for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = 0; b < idx.size(); ++b) minor[a][b] = -q[idx[a]][idx[b]];
        if (det(minor) < 0) nsd = false;
    }
    return {nsd, rank_of(q)};
}

// Independent oracle for top self-intersection of a nef class: n! times the
// volume of its section polytope.
inline Int nef_volume_oracle(const Polytope& p, const GradingData& g,
                             const std::vector<PrimitiveRelation>& rels, const IntVec& a_class) {
    for (const PrimitiveRelation& rel : rels) {
        IntVec cc = g.curve_class(rel.relation_vector(g.r));
        if (dot(a_class, cc) < 0)
            throw PreconditionError("nef_volume_oracle: class is not nef");
    }
    IntVec a = g.lift(a_class);
    std::vector<Halfspace> hs;
    IntMat verts = p.int_vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        hs.push_back(Halfspace{verts[i], Rat(a[i])});
    RatMat section = Polytope::vertex_enumeration(p.dim(), hs);
    Rat vol = Polytope::normalized_volume_of(section, p.dim());
    if (!is_integer(vol)) throw InternalError("nef_volume_oracle: non-integral normalized volume");
    return vol.get_num();
}

}  // namespace cytoric
