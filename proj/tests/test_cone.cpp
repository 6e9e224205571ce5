#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace testsupport;

TEST_CASE("positive orthant: rays and facets are the unit vectors") {
    RationalCone c = RationalCone::from_generators(3, im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(c.rays() == im({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
    CHECK(c.facet_normals() == im({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
    CHECK(c.full_dimensional());
    CHECK(c.dim() == 3);
}

TEST_CASE("redundant and scaled generators are pruned") {
    RationalCone c = RationalCone::from_generators(
        2, im({{1, 0}, {2, 0}, {1, 1}, {0, 1}, {3, 3}}));
    CHECK(c.rays() == im({{0, 1}, {1, 0}}));
}

TEST_CASE("dual of the orthant is the orthant and biduality holds") {
    RationalCone c = RationalCone::from_generators(3, im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(c.dual() == c);
    RationalCone skew = RationalCone::from_generators(2, im({{2, -1}, {1, 3}}));
    CHECK(skew.dual().dual() == skew);
}

TEST_CASE("zero cone and non-pointed input") {
    RationalCone z = RationalCone::from_generators(3, {});
    CHECK(z.is_zero_cone());
    CHECK(z.rays().empty());
    CHECK(z.contains(iv({0, 0, 0})));
    CHECK(!z.contains(iv({1, 0, 0})));
    CHECK_THROWS_AS(RationalCone::from_generators(2, im({{1, 0}, {-1, 0}})),
                    NonPointedCone);
    CHECK_THROWS_AS(RationalCone::from_inequalities(3, im({{1, 0, 0}})), NonPointedCone);
}

TEST_CASE("lower-dimensional cones carry span equations") {
    RationalCone c = RationalCone::from_generators(3, im({{1, 0, 0}, {0, 1, 0}}));
    CHECK(c.dim() == 2);
    CHECK(!c.full_dimensional());
    CHECK(c.equations() == im({{0, 0, 1}}));
    CHECK(c.contains(iv({1, 2, 0})));
    CHECK(!c.contains(iv({1, 2, 1})));
    CHECK_THROWS_AS(c.dual(), PreconditionError);
}

TEST_CASE("intersection via concatenated facet systems") {
    RationalCone a = RationalCone::from_generators(2, im({{1, 0}, {1, 2}}));
    RationalCone b = RationalCone::from_generators(2, im({{2, 1}, {0, 1}}));
    RationalCone c = intersect(a, b);
    CHECK(c.rays() == im({{1, 2}, {2, 1}}));
    RationalCone self = intersect(a, a);
    CHECK(self == a);
}

TEST_CASE("facet cones partition the boundary") {
    RationalCone c = RationalCone::from_generators(
        3, im({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}));
    auto facets = c.facet_cones();
    CHECK(facets.size() == c.facet_normals().size());
    for (const RationalCone& f : facets) CHECK(f.dim() == 2);
    for (const IntVec& ray : c.rays()) {
        bool on_some = false;
        for (const RationalCone& f : facets)
            if (f.contains(ray)) on_some = true;
        CHECK(on_some);
    }
    RationalCone simplicial = RationalCone::from_generators(3, im({{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}));
    CHECK(simplicial.facet_cones().size() == simplicial.rays().size());
}

TEST_CASE("double description consistency on random cones and points") {
    auto gen = rng(404);
    int cones_done = 0;
    while (cones_done < 12) {
        std::size_t d = 2 + static_cast<std::size_t>(cones_done % 4);  // 2..5
        IntMat gens;
        std::size_t count = d + 1 + static_cast<std::size_t>(cones_done % 3);
        for (std::size_t i = 0; i < count; ++i) {
            IntVec v = rand_vec(gen, d, -3, 3);
            v[0] = rand_int(gen, 1, 4);  // keep the cone pointed
            gens.push_back(v);
        }
        RationalCone c = RationalCone::from_generators(d, gens);
        if (c.is_zero_cone()) continue;
        ++cones_done;
        // every generator is a member; rays are among the generators up to scale
        for (const IntVec& g : gens) CHECK(c.contains(g));
        std::set<IntVec> gset;
        for (const IntVec& g : gens) gset.insert(primitive_part(g));
        for (const IntVec& rray : c.rays()) CHECK(gset.count(rray) == 1);
        for (int probe = 0; probe < 80; ++probe) {
            IntVec x = rand_vec(gen, d, -5, 5);
            CHECK(c.contains(x) == c.contains_by_generators(x));
        }
    }
}

TEST_CASE("membership by facets equals membership by generators, 1000 points") {
    RationalCone c = RationalCone::from_generators(
        4, im({{1, 0, 0, 0}, {1, 2, 0, 0}, {1, 0, 3, 0}, {1, 1, 1, 1}, {2, 1, 0, 1}}));
    auto gen = rng(505);
    for (int probe = 0; probe < 1000; ++probe) {
        IntVec x = rand_vec(gen, 4, -4, 4);
        CHECK(c.contains(x) == c.contains_by_generators(x));
    }
}
