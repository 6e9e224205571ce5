#pragma once

#include "chow.hpp"

#include <array>
#include <optional>
#include <variant>

namespace cytoric {

// ---------------------------------------------------------------------------
// Configuration detectors
// ---------------------------------------------------------------------------

struct Thm2Detection {
    bool case_i = false;
    bool case_ii = false;
    // four distinct vertices in configuration order
    std::vector<std::array<int, 4>> witnesses_i;   // v1+v2 = v3+v4 = 0
    std::vector<std::array<int, 4>> witnesses_ii;  // v1+v2 = 0, v3+v4 = v1
};

inline int pair_partner(const PrimitiveRelation& pair, int i) {
    return pair.collection.indices[0] == i ? pair.collection.indices[1] : pair.collection.indices[0];
}

inline int pair_target(const PrimitiveRelation& pair) {
    if (pair.rhs.size() != 1 || pair.degree != 1)
        throw PreconditionError("pair_target: not a degree-1 pair");
    return pair.rhs.begin()->first;
}

inline std::optional<Thm2Detection> detect_thm2(const std::vector<PrimitiveRelation>& rels) {
    std::vector<PrimitiveRelation> deg2, deg1;
    for (const auto& rel : primitive_pairs(rels))
        (rel.degree == 2 ? deg2 : deg1).push_back(rel);
    Thm2Detection d;
    for (std::size_t a = 0; a < deg2.size(); ++a)
        for (std::size_t b = a + 1; b < deg2.size(); ++b) {
            d.case_i = true;
            d.witnesses_i.push_back({deg2[a].collection.indices[0], deg2[a].collection.indices[1],
                                     deg2[b].collection.indices[0], deg2[b].collection.indices[1]});
        }
    for (const auto& p2 : deg2)
        for (const auto& p1 : deg1) {
            int t = pair_target(p1);
            if (t != p2.collection.indices[0] && t != p2.collection.indices[1]) continue;
            d.case_ii = true;
            d.witnesses_ii.push_back({t, pair_partner(p2, t), p1.collection.indices[0],
                                      p1.collection.indices[1]});
        }
    if (!d.case_i && !d.case_ii) return std::nullopt;
    return d;
}

struct Thm1Detection {
    int case_no;                  // 1..4
    std::vector<int> assignment;  // distinguished ray indices x1, x2, (x3, x4, x5, x6)
};

struct Ex117Detection {
    std::vector<int> assignment;  // x1..x5 with v1+v2 = v3, v3+v4 = v5
};

using Thm1OrEx117 = std::variant<Thm1Detection, Ex117Detection>;

// Exact match of the full primitive-pair set against the four configurations,
// up to relabeling. Two degree-1 pairs whose target lands inside the other
// pair are routed to the index-117 variant instead of case (iv).
inline std::optional<Thm1OrEx117> detect_thm1(const std::vector<PrimitiveRelation>& rels) {
    std::vector<PrimitiveRelation> pairs = primitive_pairs(rels);
    std::sort(pairs.begin(), pairs.end(),
              [](const PrimitiveRelation& a, const PrimitiveRelation& b) {
                  return a.collection < b.collection;
              });
    auto in_pair = [](const PrimitiveRelation& p, int i) {
        return p.collection.indices[0] == i || p.collection.indices[1] == i;
    };

    if (pairs.size() == 1) {
        const PrimitiveRelation& p = pairs[0];
        if (p.degree == 1)
            return Thm1Detection{1, {p.collection.indices[0], p.collection.indices[1], pair_target(p)}};
        return Thm1Detection{2, {p.collection.indices[0], p.collection.indices[1]}};
    }

    if (pairs.size() == 2) {
        if (pairs[0].degree != 1 || pairs[1].degree != 1) return std::nullopt;
        int t0 = pair_target(pairs[0]), t1 = pair_target(pairs[1]);
        if (in_pair(pairs[1], t0)) {
            return Ex117Detection{{pairs[0].collection.indices[0], pairs[0].collection.indices[1],
                                   t0, pair_partner(pairs[1], t0), t1}};
        }
        if (in_pair(pairs[0], t1)) {
            return Ex117Detection{{pairs[1].collection.indices[0], pairs[1].collection.indices[1],
                                   t1, pair_partner(pairs[0], t1), t0}};
        }
        return Thm1Detection{4, {pairs[0].collection.indices[0], pairs[0].collection.indices[1],
                                 pairs[1].collection.indices[0], pairs[1].collection.indices[1],
                                 t0, t1}};
    }

    if (pairs.size() == 3) {
        // case (iii): v1+v2 = 0, v1+v4 = v3, v2+v3 = v4
        std::vector<const PrimitiveRelation*> deg2, deg1;
        for (const auto& p : pairs) (p.degree == 2 ? deg2 : deg1).push_back(&p);
        if (deg2.size() != 1 || deg1.size() != 2) return std::nullopt;
        int a = deg2[0]->collection.indices[0], b = deg2[0]->collection.indices[1];
        for (int x1 : {a, b}) {
            int x2 = x1 == a ? b : a;
            for (int first : {0, 1}) {
                const PrimitiveRelation* q = deg1[static_cast<std::size_t>(first)];
                const PrimitiveRelation* q2 = deg1[static_cast<std::size_t>(1 - first)];
                if (!in_pair(*q, x1)) continue;
                int x4 = pair_partner(*q, x1);
                int x3 = pair_target(*q);
                // remaining pair must be {x2, x3} with target x4
                std::vector<int> want = {std::min(x2, x3), std::max(x2, x3)};
                if (q2->collection.indices == want && pair_target(*q2) == x4)
                    return Thm1Detection{3, {x1, x2, x3, x4}};
            }
        }
        return std::nullopt;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cox ring presentations
// ---------------------------------------------------------------------------

struct CoxSymbol {
    char kind;  // 'x' ambient variable (actual ray index), 's' extra, 'f' bucket
    int index;  // 1-based

    bool operator==(const CoxSymbol& o) const { return kind == o.kind && index == o.index; }
    bool operator<(const CoxSymbol& o) const {
        return kind != o.kind ? kind < o.kind : index < o.index;
    }
};

struct CoxTerm {
    int sign;  // +1 / -1
    std::vector<CoxSymbol> factors;  // sorted multiset
};

using CoxRelation = std::vector<CoxTerm>;

struct CoxPresentation {
    std::string case_tag;  // "i", "ii", "iii", "iv", "ex117"
    std::vector<int> assignment;
    AnticanonicalDecomposition decomposition;
    std::vector<IntVec> s_degrees;
    std::vector<CoxRelation> relations;
    bool requires_normalization = false;
};

namespace detail {

struct TermSpec {
    int sign;
    const char* factors;  // e.g. "x1 x3 s2" or "f1 f4"; numbers are slots for x
};

inline CoxRelation instantiate_relation(const std::vector<TermSpec>& specs,
                                        const std::vector<int>& assignment) {
    CoxRelation rel;
    for (const TermSpec& ts : specs) {
        CoxTerm term;
        term.sign = ts.sign;
        const char* s = ts.factors;
        while (*s) {
            if (*s == ' ') { ++s; continue; }
            char kind = *s++;
            int idx = 0;
            while (*s >= '0' && *s <= '9') idx = idx * 10 + (*s++ - '0');
            if (kind == 'x') idx = assignment[static_cast<std::size_t>(idx - 1)];
            term.factors.push_back(CoxSymbol{kind, idx});
        }
        std::sort(term.factors.begin(), term.factors.end());
        rel.push_back(std::move(term));
    }
    return rel;
}

}  // namespace detail

inline IntVec cox_term_degree(const CoxTerm& t, const GradingData& g, const CoxPresentation& p) {
    IntVec deg = zero_vec(g.picard_rank);
    for (const CoxSymbol& sym : t.factors) {
        switch (sym.kind) {
            case 'x': deg = vec_add(deg, g.w(sym.index)); break;
            case 's': deg = vec_add(deg, p.s_degrees[static_cast<std::size_t>(sym.index - 1)]); break;
            case 'f':
                deg = vec_add(deg, p.decomposition.buckets[static_cast<std::size_t>(sym.index - 1)].degree);
                break;
            default: throw InternalError("cox_term_degree: unknown symbol kind");
        }
    }
    return deg;
}

inline void verify_homogeneous(const CoxPresentation& p, const GradingData& g) {
    for (const CoxRelation& rel : p.relations) {
        if (rel.empty()) throw InternalError("cox presentation: empty relation");
        IntVec d0 = cox_term_degree(rel[0], g, p);
        for (const CoxTerm& t : rel)
            if (cox_term_degree(t, g, p) != d0)
                throw StructuralError("cox presentation: relation is not homogeneous");
    }
}

// Instantiates the presentation shape of the detected case with the actual
// bucket degrees; all relations are verified homogeneous in the Cl-grading.
inline CoxPresentation emit_cox_presentation(const Thm1OrEx117& det, const Polytope& poly,
                                             const GradingData& g) {
    using detail::TermSpec;
    CoxPresentation p;
    std::vector<std::vector<TermSpec>> rel_specs;
    if (std::holds_alternative<Thm1Detection>(det)) {
        const Thm1Detection& t = std::get<Thm1Detection>(det);
        p.assignment = t.assignment;
        auto w = [&](int slot) { return g.w(t.assignment[static_cast<std::size_t>(slot - 1)]); };
        switch (t.case_no) {
            case 1:
                p.case_tag = "i";
                p.decomposition = anticanonical_decomposition(
                    poly, g, DecompCase::pair_deg1, {t.assignment[0], t.assignment[1]});
                p.s_degrees = {vec_sub(p.decomposition.buckets[1].degree, w(1))};
                rel_specs = {{{+1, "f2"}, {-1, "s1 x1"}}, {{+1, "f1"}, {+1, "s1 x2"}}};
                break;
            case 2:
                p.case_tag = "ii";
                p.decomposition = anticanonical_decomposition(
                    poly, g, DecompCase::pair_deg2, {t.assignment[0], t.assignment[1]});
                p.s_degrees = {vec_sub(p.decomposition.buckets[2].degree, w(1)),
                               vec_sub(p.decomposition.buckets[0].degree, w(2))};
                rel_specs = {{{+1, "f3"}, {-1, "x1 s1"}},
                             {{+1, "f2"}, {+1, "x1 s2"}, {+1, "x2 s1"}},
                             {{+1, "f1"}, {-1, "x2 s2"}}};
                break;
            case 3:
                p.case_tag = "iii";
                p.decomposition =
                    anticanonical_decomposition(poly, g, DecompCase::thm1_iii, t.assignment);
                p.s_degrees = {vec_sub(p.decomposition.buckets[2].degree, w(1)),
                               vec_sub(p.decomposition.buckets[0].degree, w(2))};
                rel_specs = {{{+1, "f3"}, {-1, "x1 s1"}},
                             {{+1, "f2"}, {+1, "x1 x3 s2"}, {+1, "x2 x4 s1"}},
                             {{+1, "f1"}, {-1, "x2 s2"}}};
                break;
            case 4: {
                p.case_tag = "iv";
                std::vector<int> slots(t.assignment.begin(), t.assignment.begin() + 4);
                p.decomposition = anticanonical_decomposition(poly, g, DecompCase::thm1_iv, slots);
                IntVec s1 = vec_sub(vec_add(w(1), p.decomposition.buckets[1].degree), w(3));
                IntVec s2 = vec_sub(vec_add(w(3), p.decomposition.buckets[2].degree), w(1));
                p.s_degrees = {s1, s2};
                rel_specs = {{{+1, "f1 f4"}, {-1, "f2 f3"}, {+1, "s1 s2"}},
                             {{+1, "x2 s2"}, {+1, "x3 f1"}, {+1, "x4 f2"}},
                             {{+1, "x1 s2"}, {-1, "x3 f3"}, {-1, "x4 f4"}},
                             {{+1, "x1 f2"}, {+1, "x2 f4"}, {-1, "x3 s1"}},
                             {{+1, "x1 f1"}, {+1, "x2 f3"}, {+1, "x4 s1"}}};
                break;
            }
            default: throw InternalError("emit_cox_presentation: bad case number");
        }
    } else {
        const Ex117Detection& t = std::get<Ex117Detection>(det);
        p.case_tag = "ex117";
        p.assignment = t.assignment;
        std::vector<int> slots(t.assignment.begin(), t.assignment.begin() + 4);
        p.decomposition = anticanonical_decomposition(poly, g, DecompCase::ex117, slots);
        auto w = [&](int slot) { return g.w(t.assignment[static_cast<std::size_t>(slot - 1)]); };
        const auto& b = p.decomposition.buckets;
        IntVec s1 = vec_sub(vec_add(vec_add(w(2), w(3)), b[3].degree), w(1));
        IntVec s2 = vec_sub(vec_add(w(1), b[2].degree), w(3));
        IntVec s3 = vec_sub(vec_add(w(3), vec_add(b[0].degree, b[4].degree)), w(2));
        p.s_degrees = {s1, s2, s3};
        p.requires_normalization = true;
        rel_specs = {{{+1, "x1 s1"}, {-1, "x2 x3 f4"}, {-1, "x4 f5"}},
                     {{+1, "x1 x1 f1"}, {+1, "x1 x2 f2"}, {+1, "x2 x2 f4"}, {+1, "x4 s2"}},
                     {{+1, "x1 f1 f5"}, {+1, "x2 f2 f5"}, {-1, "x2 f3 f4"}, {+1, "s1 s2"}},
                     {{+1, "x1 f3"}, {+1, "x2 f5"}, {-1, "x3 s2"}},
                     {{+1, "x2 s3"}, {+1, "x3 f1 f5"}, {+1, "f3 s1"}},
                     {{+1, "x3 x3 f1 f4"}, {+1, "x3 f2 s1"}, {-1, "x4 s3"}, {+1, "s1 s1"}},
                     {{+1, "x1 x3 f1"}, {+1, "x2 x3 f2"}, {+1, "x2 s1"}, {+1, "x4 f3"}},
                     {{+1, "x1 s3"}, {-1, "x3 f2 f5"}, {+1, "x3 f3 f4"}, {-1, "f5 s1"}},
                     {{+1, "f1 f5 f5"}, {-1, "f2 f3 f5"}, {+1, "f3 f3 f4"}, {+1, "s2 s3"}}};
    }
    for (const auto& spec : rel_specs)
        p.relations.push_back(detail::instantiate_relation(spec, p.assignment));
    verify_homogeneous(p, g);
    return p;
}

// ---------------------------------------------------------------------------
// Birational involutions from degree-2 pairs
// ---------------------------------------------------------------------------

struct InvolutionAction {
    IntMat matrix;             // action on Cl in the grading basis, columns = images
    std::pair<int, int> pair;  // {a, b} with v_a + v_b = 0
};

// Action of the conic-bundle involution of a degree-2 pair on the class
// group: the pair classes map to -w_partner + sum of the classes not tied to
// the pair, degree-1 partners swap, everything else is fixed.
inline InvolutionAction involution_action(const GradingData& g,
                                          const std::vector<PrimitiveRelation>& rels, int a, int b) {
    bool found = false;
    for (const auto& rel : primitive_pairs(rels)) {
        if (rel.collection.indices == std::vector<int>{std::min(a, b), std::max(a, b)}) {
            if (rel.degree != 2)
                throw PreconditionError("involution_action: pair does not have degree 2");
            found = true;
        }
    }
    if (!found) throw PreconditionError("involution_action: not a primitive pair");

    std::vector<PrimitiveRelation> pairs = primitive_pairs(rels);
    auto partners = [&](int base) {
        std::map<int, int> out;  // i -> j with v_base + v_i = v_j
        for (const auto& p : pairs) {
            if (p.degree != 1) continue;
            if (p.collection.indices[0] == base) out[p.collection.indices[1]] = pair_target(p);
            if (p.collection.indices[1] == base) out[p.collection.indices[0]] = pair_target(p);
        }
        return out;
    };
    std::map<int, int> pa = partners(a), pb = partners(b);

    auto sigma_of_pair_class = [&](int self, int other, const std::map<int, int>& tied) {
        IntVec img = vec_neg(g.w(other));
        for (int j = 1; j <= static_cast<int>(g.r); ++j) {
            if (j == a || j == b) continue;
            if (tied.count(j)) continue;
            img = vec_add(img, g.w(j));
        }
        (void)self;
        return img;
    };

    IntMat images;  // columns u_i
    for (int i = 1; i <= static_cast<int>(g.r); ++i) {
        IntVec u;
        if (i == a) u = sigma_of_pair_class(a, b, pa);
        else if (i == b) u = sigma_of_pair_class(b, a, pb);
        else if (pa.count(i)) u = g.w(pa[i]);
        else if (pb.count(i)) u = g.w(pb[i]);
        else u = g.w(i);
        images.push_back(u);
    }
    IntMat u_cols = transpose(images);  // picard x r, column i = image of w_i
    IntMat m = mat_mul(u_cols, g.right_inv);
    if (mat_mul(m, g.q) != u_cols)
        throw InternalError("involution_action: image assignment is not linear");
    if (mat_mul(m, m) != identity_mat(g.picard_rank))
        throw InternalError("involution_action: matrix is not an involution");
    InvolutionAction act;
    act.matrix = m;
    act.pair = {std::min(a, b), std::max(a, b)};
    return act;
}

inline IntVec apply_action(const IntMat& m, const IntVec& v) { return mat_vec(m, v); }

inline IntMat apply_action_rows(const IntMat& m, const IntMat& rows) {
    IntMat out;
    for (const IntVec& v : rows) out.push_back(mat_vec(m, v));
    return out;
}

// ---------------------------------------------------------------------------
// TestFace
// ---------------------------------------------------------------------------

struct TestFaceResult {
    bool passed = false;
    IntVec witness;  // movable ray class certifying the facet
    IntMat q;        // its intersection form on the facet rays
};

// Certifies that the facet spanned by `facet_rays` lies on the boundary of
// Eff(X): some movable ray A makes (A^(n-3) . X . w_i . w_j) nonzero negative
// semidefinite.
inline TestFaceResult testface(const ChowRing& chow, const GradingData& g, const IntMat& mov_rays,
                               const IntMat& facet_rays) {
    for (const IntVec& a : mov_rays) {
        IntMat q = chow.q_matrix(g, a, facet_rays);
        auto [nsd, rank] = is_negative_semidefinite_nontrivial(q);
        if (nsd && rank > 0) return TestFaceResult{true, a, q};
    }
    return TestFaceResult{};
}

// ---------------------------------------------------------------------------
// Classification pipeline
// ---------------------------------------------------------------------------

enum class Mds { yes, no, unknown };

enum class Method {
    no_pairs,
    thm1_i,
    thm1_ii,
    thm1_iii,
    thm1_iv,
    thm2_i,
    thm2_ii,
    thm2_both,
    testface,
    ex117
};

inline std::string method_name(Method m) {
    switch (m) {
        case Method::no_pairs: return "no-pairs";
        case Method::thm1_i: return "thm1-i";
        case Method::thm1_ii: return "thm1-ii";
        case Method::thm1_iii: return "thm1-iii";
        case Method::thm1_iv: return "thm1-iv";
        case Method::thm2_i: return "thm2-i";
        case Method::thm2_ii: return "thm2-ii";
        case Method::thm2_both: return "thm2-both";
        case Method::testface: return "testface";
        case Method::ex117: return "ex117";
    }
    return "?";
}

inline std::string mds_name(Mds m) {
    switch (m) {
        case Mds::yes: return "yes";
        case Mds::no: return "no";
        case Mds::unknown: return "unknown";
    }
    return "?";
}

struct FacetCertificate {
    IntMat facet_rays;
    bool passed = false;
    bool via_involution = false;  // certified through the image facet sigma*(F)
    std::size_t involution_index = 0;
    TestFaceResult result;
};

struct ClassificationVerdict {
    Mds mds = Mds::unknown;
    Method method = Method::testface;
    std::optional<CoxPresentation> presentation;
    std::optional<Thm2Detection> thm2;
    std::vector<InvolutionAction> involutions;
    std::optional<RationalCone> candidate_cone;
    std::vector<FacetCertificate> certificates;
};

// The full decision pipeline for a smooth Fano polytope.
inline ClassificationVerdict classify(const Polytope& poly) {
    if (!poly.is_smooth())
        throw PreconditionError("classify: polytope must be smooth Fano");
    FaceFan fan = FaceFan::build(poly);
    std::vector<PrimitiveRelation> rels = all_primitive_relations(fan);
    GradingData g = grading(poly);
    std::vector<PrimitiveRelation> pairs = primitive_pairs(rels);

    ClassificationVerdict v;
    if (pairs.empty()) {
        v.mds = Mds::yes;
        v.method = Method::no_pairs;
        return v;
    }
    if (std::optional<Thm2Detection> d2 = detect_thm2(rels)) {
        v.mds = Mds::no;
        v.method = d2->case_i && d2->case_ii ? Method::thm2_both
                   : d2->case_i             ? Method::thm2_i
                                            : Method::thm2_ii;
        v.thm2 = std::move(d2);
        return v;
    }
    if (std::optional<Thm1OrEx117> d1 = detect_thm1(rels)) {
        v.mds = Mds::yes;
        if (std::holds_alternative<Thm1Detection>(*d1)) {
            switch (std::get<Thm1Detection>(*d1).case_no) {
                case 1: v.method = Method::thm1_i; break;
                case 2: v.method = Method::thm1_ii; break;
                case 3: v.method = Method::thm1_iii; break;
                case 4: v.method = Method::thm1_iv; break;
            }
        } else {
            v.method = Method::ex117;
        }
        v.presentation = emit_cox_presentation(*d1, poly, g);
        return v;
    }

    // TestFace path: candidate cone from the effective rays and their images
    // under every degree-2-pair involution, then certify every facet either
    // directly or through one of the involution images.
    v.method = Method::testface;
    for (const auto& p : pairs)
        if (p.degree == 2)
            v.involutions.push_back(
                involution_action(g, rels, p.collection.indices[0], p.collection.indices[1]));
    RationalCone eff = eff_cone(g);
    IntMat gens = eff.rays();
    for (const InvolutionAction& act : v.involutions)
        for (const IntVec& ray : eff.rays()) gens.push_back(apply_action(act.matrix, ray));
    RationalCone candidate = RationalCone::from_generators(g.picard_rank, gens);
    RationalCone mov = mov_cone(g);
    ChowRing chow(fan);

    bool all_passed = true;
    for (const RationalCone& facet : candidate.facet_cones()) {
        FacetCertificate cert;
        cert.facet_rays = facet.rays();
        cert.result = testface(chow, g, mov.rays(), facet.rays());
        cert.passed = cert.result.passed;
        if (!cert.passed) {
            for (std::size_t s = 0; s < v.involutions.size() && !cert.passed; ++s) {
                IntMat image;
                for (const IntVec& ray : facet.rays())
                    image.push_back(primitive_part(apply_action(v.involutions[s].matrix, ray)));
                TestFaceResult res = testface(chow, g, mov.rays(), image);
                if (res.passed) {
                    cert.passed = true;
                    cert.via_involution = true;
                    cert.involution_index = s;
                    cert.result = res;
                }
            }
        }
        all_passed = all_passed && cert.passed;
        v.certificates.push_back(std::move(cert));
    }
    v.candidate_cone = std::move(candidate);
    v.mds = all_passed ? Mds::yes : Mds::unknown;
    return v;
}

// ---------------------------------------------------------------------------
// Nef facets against the movable boundary
// ---------------------------------------------------------------------------

enum class NefFacetStatus { fiber_1dim, divisorial_1dim, small, mov_facet };

inline std::string nef_facet_status_name(NefFacetStatus s) {
    switch (s) {
        case NefFacetStatus::fiber_1dim: return "fiber-1dim";
        case NefFacetStatus::divisorial_1dim: return "divisorial-1dim";
        case NefFacetStatus::small: return "small";
        case NefFacetStatus::mov_facet: return "mov-facet";
    }
    return "?";
}

struct NefFacetInfo {
    NefFacetStatus status;
    std::size_t relation_index;  // the extremal primitive relation dual to the facet
};

// Classifies a facet of Nef by the extremal primitive relation dual to it:
// degree-2 pairs are one-dimensional fiber contractions, degree-1 pairs
// divisorial with one-dimensional fibers, relations with two or more rays on
// the right-hand side are small; everything else stays a facet of Mov(X).
inline NefFacetInfo nef_facet_status(const GradingData& g,
                                     const std::vector<PrimitiveRelation>& rels,
                                     const RationalCone& facet) {
    std::optional<std::size_t> match;
    for (std::size_t k = 0; k < rels.size(); ++k) {
        IntVec cc = g.curve_class(rels[k].relation_vector(g.r));
        bool orthogonal = true;
        for (const IntVec& ray : facet.rays())
            if (dot(ray, cc) != 0) { orthogonal = false; break; }
        if (!orthogonal) continue;
        if (!is_extremal(rels, k, g.r)) continue;
        if (match && primitive_part(g.curve_class(rels[*match].relation_vector(g.r))) !=
                         primitive_part(cc))
            throw InternalError("nef_facet_status: two non-parallel extremal relations on one facet");
        if (!match) match = k;
    }
    if (!match)
        throw InternalError("nef_facet_status: facet matches no extremal primitive relation");
    const PrimitiveRelation& rel = rels[*match];
    NefFacetInfo info{NefFacetStatus::mov_facet, *match};
    if (rel.is_pair() && rel.degree == 2) info.status = NefFacetStatus::fiber_1dim;
    else if (rel.is_pair() && rel.degree == 1) info.status = NefFacetStatus::divisorial_1dim;
    else if (rel.rhs.size() >= 2) info.status = NefFacetStatus::small;
    return info;
}

}  // namespace cytoric
