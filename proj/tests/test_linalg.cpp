#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace testsupport;

TEST_CASE("hnf of the identity is the identity") {
    IntMat id = identity_mat(4);
    HnfResult r = hnf(id);
    CHECK(r.h == id);
    CHECK(mat_mul(r.u, id) == r.h);
}

TEST_CASE("hnf transform is unimodular and reproduces the form") {
    auto gen = rng(11);
    for (int round = 0; round < 40; ++round) {
        std::size_t rows = 2 + round % 4, cols = 2 + (round / 2) % 5;
        IntMat m;
        for (std::size_t i = 0; i < rows; ++i) m.push_back(rand_vec(gen, cols, -9, 9));
        HnfResult r = hnf(m);
        Int d = det(r.u);
        CHECK((d == 1 || d == -1));
        CHECK(mat_mul(r.u, m) == r.h);
        // canonical: pivots positive, entries above reduced into [0, pivot)
        for (std::size_t k = 0; k < r.pivots.size(); ++k) {
            const Int& piv = r.h[k][r.pivots[k]];
            CHECK(piv > 0);
            for (std::size_t i = 0; i < k; ++i) {
                CHECK(r.h[i][r.pivots[k]] >= 0);
                CHECK(r.h[i][r.pivots[k]] < piv);
            }
        }
    }
}

TEST_CASE("snf diagonal divisibility and transforms") {
    auto gen = rng(23);
    for (int round = 0; round < 40; ++round) {
        std::size_t rows = 1 + round % 4, cols = 1 + (round / 3) % 5;
        IntMat m;
        for (std::size_t i = 0; i < rows; ++i) m.push_back(rand_vec(gen, cols, -7, 7));
        SnfResult s = snf(m);
        CHECK(mat_mul(mat_mul(s.u, m), s.v) == s.d);
        Int du = det(s.u), dv = det(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (std::size_t i = 0; i + 1 < std::min(rows, cols); ++i) {
            if (s.d[i + 1][i + 1] == 0) continue;
            REQUIRE(s.d[i][i] != 0);
            CHECK(s.d[i + 1][i + 1] % s.d[i][i] == 0);
        }
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j) CHECK(s.d[i][j] == 0);
    }
}

TEST_CASE("integer kernel of the identity is empty") {
    CHECK(integer_kernel(identity_mat(3), 3).empty());
}

TEST_CASE("integer kernel is saturated and annihilates the matrix") {
    auto gen = rng(37);
    for (int round = 0; round < 50; ++round) {
        std::size_t rows = 1 + round % 4, cols = rows + 1 + (round / 5) % 4;
        IntMat m;
        for (std::size_t i = 0; i < rows; ++i) m.push_back(rand_vec(gen, cols, -6, 6));
        IntMat k = integer_kernel(m, cols);
        CHECK(k.size() == cols - rank_of(m));
        for (const IntVec& v : k) CHECK(is_zero(mat_vec(m, v)));
        if (!k.empty()) {
            CHECK(rows_saturated(k));
            IntVec diag = snf_diagonal(k);
            for (std::size_t i = 0; i < k.size(); ++i) CHECK(diag[i] == 1);
        }
    }
}

TEST_CASE("kernel of the grdb:35 vertex matrix has rank 3") {
    IntMat vm = im({{1, 0, 0, 0, -1, 0, 0},
                    {0, 1, 0, 0, -1, 1, 0},
                    {0, 0, 1, 0, 0, -1, 0},
                    {0, 0, 0, 1, 2, 0, -1}});
    CHECK(integer_kernel(vm, 7).size() == 3);
}

TEST_CASE("solve_integer finds integer solutions exactly when they exist") {
    IntMat a = im({{2, 0}, {0, 3}});
    auto x = solve_integer(a, iv({4, 9}));
    REQUIRE(x.has_value());
    CHECK(*x == iv({2, 3}));
    CHECK(!solve_integer(a, iv({1, 0})).has_value());
}

TEST_CASE("right inverse exists for saturated surjections") {
    IntMat q = im({{1, 1, 1, 1}});
    auto r = right_inverse(q);
    REQUIRE(r.has_value());
    CHECK(mat_mul(q, *r) == identity_mat(1));
    CHECK(!right_inverse(im({{2, 4}})).has_value());
}

TEST_CASE("unimodular row transform recognizes equal row lattices") {
    IntMat q = im({{1, 0, 2}, {0, 1, 3}});
    IntMat q2 = im({{1, 1, 5}, {0, 1, 3}});
    auto u = unimodular_row_transform(q, q2);
    REQUIRE(u.has_value());
    CHECK(mat_mul(*u, q) == q2);
    CHECK(!unimodular_row_transform(q, im({{2, 0, 4}, {0, 1, 3}})).has_value());
}

TEST_CASE("determinant matches cofactor expansion on small matrices") {
    CHECK(det(im({{2, 1}, {7, 4}})) == 1);
    CHECK(det(im({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}})) == -3);
    CHECK(det(im({{0, 1}, {1, 0}})) == -1);
    CHECK(det(identity_mat(5)) == 1);
}

TEST_CASE("random integer kernels match a rational-elimination oracle") {
    auto gen = rng(101);
    for (int round = 0; round < 30; ++round) {
        IntMat m;
        for (int i = 0; i < 4; ++i) m.push_back(rand_vec(gen, 7, -5, 5));
        IntMat k = integer_kernel(m, 7);
        IntMat oracle = rational_kernel(m, 7);
        CHECK(k.size() == oracle.size());
        // same rational span: each oracle vector solves against the kernel basis
        for (const IntVec& v : oracle) {
            auto sol = solve_rational(transpose(k), v);
            CHECK(sol.has_value());
        }
    }
}

TEST_CASE("phase-one simplex feasibility") {
    // x + y = 3, x - y = 1 has the nonnegative solution (2, 1)
    CHECK(nonnegative_solution_exists(im({{1, 1}, {1, -1}}), iv({3, 1})));
    // x + y = -1 has none
    CHECK(!nonnegative_solution_exists(im({{1, 1}}), iv({-1})));
    // x - y = 1 alone is feasible
    CHECK(nonnegative_solution_exists(im({{1, -1}}), iv({1})));
    CHECK(in_cone_hull(im({{1, 0}, {1, 1}}), iv({2, 1})));
    CHECK(!in_cone_hull(im({{1, 0}, {1, 1}}), iv({0, 1})));
    CHECK(in_cone_hull(im({{1, 0}, {1, 1}}), iv({0, 0})));
}

TEST_CASE("simplex membership agrees with direct enumeration on random cones") {
    auto gen = rng(202);
    for (int round = 0; round < 25; ++round) {
        IntMat gens;
        for (int i = 0; i < 4; ++i) {
            IntVec v = rand_vec(gen, 3, 0, 4);  // generators in the orthant
            if (!is_zero(v)) gens.push_back(v);
        }
        if (gens.empty()) continue;
        IntVec probe = rand_vec(gen, 3, -2, 6);
        bool member = in_cone_hull(gens, probe);
        bool has_negative = std::any_of(probe.begin(), probe.end(), [](const Int& x) { return x < 0; });
        if (has_negative) CHECK(!member);  // orthant generators cannot reach it
    }
}
