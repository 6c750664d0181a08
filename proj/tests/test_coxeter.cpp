#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxline/coxeter.hpp"
#include "coxline/errors.hpp"

using namespace coxline;

namespace {

std::set<IntVec> row_set(const RatMatrix& m) {
    std::set<IntVec> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        IntVec r;
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j).to_int());
        rows.insert(std::move(r));
    }
    return rows;
}

}  // namespace

TEST_CASE("candidate differences") {
    auto plain = candidate_differences(InitialVector({-1, 0, 1}), false);
    CHECK(plain.size() == 5);
    for (const auto& c : plain) {
        CHECK(c.root != IntVec{-1, 0, 1});
        CHECK_FALSE(c.from_negation);
        CHECK(c.norm_sq > 0);
    }

    auto enrz = candidate_differences(InitialVector({-3, 1, 1, 1}), true);
    CHECK(enrz.size() == 7);
    int negated = 0;
    bool has_root = false;
    for (const auto& c : enrz) {
        if (c.from_negation) ++negated;
        has_root = has_root || c.root == IntVec{-1, 3, -1, -1};
    }
    CHECK(negated == 4);
    CHECK(has_root);

    // -w1 is already a permutation of w1: negation adds nothing.
    auto sym = candidate_differences(InitialVector({-1, -1, 1, 1}), true);
    CHECK(sym.size() == 5);
}

TEST_CASE("orthogonal clique search") {
    auto report = orthogonal_cliques(
        candidate_differences(InitialVector({1, -1, -3, -1, 1, 3}), false), 5);
    CHECK(report.candidates.size() == 179);
    CHECK(report.cliques.size() == 24);
    for (const auto& clique : report.cliques) {
        CHECK(clique.size() == 5);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                CHECK(dot(report.candidates[clique[i]].diff,
                          report.candidates[clique[j]].diff) == 0);
    }

    CHECK_THROWS_AS(orthogonal_cliques(
                        candidate_differences(InitialVector({-1, 0, 0, 0, 1}), false), 4),
                    DesignInfeasible);

    auto small = orthogonal_cliques(candidate_differences(InitialVector({-1, 0, 1}), false), 2);
    CHECK(small.cliques.size() == 2);
    CHECK(small.sorted_norms[0] == IntVec{2, 6});
    CHECK(small.sorted_norms[1] == IntVec{2, 6});
}

TEST_CASE("clique selection prefers the largest minimum edge") {
    InitialVector w1({1, -1, -3, -1, 1, 3});
    auto report = orthogonal_cliques(candidate_differences(w1, false), 5);
    RootSet rs = select_clique(report, w1);
    IntVec norms = rs.norms_sq;
    std::sort(norms.begin(), norms.end());
    CHECK(norms == IntVec{8, 8, 24, 24, 24});

    // Tie between the two congruent 6-point designs goes to the earlier
    // clique, which is the root pair of the worked example.
    InitialVector tri({-1, 0, 1});
    RootSet chosen = select_clique(orthogonal_cliques(candidate_differences(tri, false), 2), tri);
    CHECK(chosen.roots == std::vector<IntVec>{{-1, 1, 0}, {1, -1, 0}});
}

TEST_CASE("reflection matrices of the 6-point example") {
    RatMatrix o1 = reflection_matrix({0, -1, 1});
    CHECK(o1 == RatMatrix::from_ints({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));

    RatMatrix o2 = reflection_matrix({-2, 1, 1});
    RatMatrix expect(3, 3);
    long long nums[3][3] = {{-1, 2, 2}, {2, 2, -1}, {2, -1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) expect.at(i, j) = Rational(nums[i][j], 3);
    CHECK(o2 == expect);

    CHECK_THROWS_AS(reflection_matrix({0, 0, 0}), Error);
}

TEST_CASE("reflection matrices of the 8-point example") {
    RatMatrix o1 = reflection_matrix({0, -4, 0, 4});
    CHECK(o1 == RatMatrix::from_ints({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}}));

    RatMatrix o2 = reflection_matrix({-1, 1, -1, 1});
    RatMatrix expect(4, 4);
    long long nums[4][4] = {{1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, 1, 1}, {1, -1, 1, 1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) expect.at(i, j) = Rational(nums[i][j], 2);
    CHECK(o2 == expect);

    RatMatrix o3 = reflection_matrix({-4, 0, 4, 0});
    CHECK(o3 == RatMatrix::from_ints({{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}}));

    // Reflections are symmetric, orthogonal involutions and swap w1 with
    // the corresponding root permutation.
    InitialVector w1({-3, -1, 1, 3});
    std::vector<IntVec> roots = {{-3, 3, 1, -1}, {-1, -3, 3, 1}, {1, -1, -3, 3}};
    RootSet rs = rootset_from_roots(w1, roots);
    for (int i = 0; i < 3; ++i) {
        RatMatrix o = reflection_matrix(rs.diffs[i]);
        CHECK(o == o.transpose());
        CHECK(o * o.transpose() == RatMatrix::identity(4));
        RatMatrix image = RatMatrix::row_vector(std::span<const long long>(w1.components)) * o;
        for (int j = 0; j < 4; ++j) CHECK(image.at(0, j) == Rational(roots[i][j]));
    }
}

TEST_CASE("group generation") {
    RatMatrix o1 = reflection_matrix({0, -1, 1});
    RatMatrix o2 = reflection_matrix({-2, 1, 1});
    ReflectionGroup g = generate_group({o1, o2});
    CHECK(g.elements.size() == 4);
    CHECK(g.elements[0] == RatMatrix::identity(3));
    CHECK(g.elements[1] == o1);
    CHECK(g.elements[2] == o2);
    CHECK(g.elements[3] == o1 * o2);

    InitialVector w1({-3, -1, 1, 3});
    RootSet rs = rootset_from_roots(w1, {{-3, 3, 1, -1}, {-1, -3, 3, 1}, {1, -1, -3, 3}});
    std::vector<RatMatrix> gens;
    for (const auto& d : rs.diffs) gens.push_back(reflection_matrix(d));
    CHECK(generate_group(gens).elements.size() == 8);

    ReflectionGroup single = generate_group({o1});
    CHECK(single.elements.size() == 2);
    CHECK(single.elements[1] == o1);

    // Non-orthogonal roots give non-commuting reflections.
    CHECK_THROWS_AS(generate_group({reflection_matrix({1, -1, 0}), reflection_matrix({0, 1, -1})}),
                    RelationViolation);
    // Repeated generators collapse the subset products.
    CHECK_THROWS_AS(generate_group({o1, o1}), DegenerateGroup);
    CHECK_THROWS_AS(generate_group({RatMatrix::from_ints({{1, 1}, {0, 1}})}), RelationViolation);
}

TEST_CASE("codebooks of the worked examples") {
    InitialVector tri({-1, 0, 1});
    RootSet rs = rootset_from_roots(tri, {{-1, 1, 0}, {1, -1, 0}});
    std::vector<RatMatrix> gens;
    for (const auto& d : rs.diffs) gens.push_back(reflection_matrix(d));
    Codebook w = build_codebook(tri, generate_group(gens));
    CHECK(w.size() == 4);
    CHECK(row_set(w.W) ==
          std::set<IntVec>{{-1, 0, 1}, {-1, 1, 0}, {1, 0, -1}, {1, -1, 0}});

    InitialVector quad({-3, -1, 1, 3});
    RootSet rs2 = rootset_from_roots(quad, {{-3, 3, 1, -1}, {-1, -3, 3, 1}, {1, -1, -3, 3}});
    std::vector<RatMatrix> gens2;
    for (const auto& d : rs2.diffs) gens2.push_back(reflection_matrix(d));
    Codebook w2 = build_codebook(quad, generate_group(gens2));
    CHECK(w2.size() == 8);
    CHECK(row_set(w2.W) == std::set<IntVec>{{-3, -1, 1, 3},
                                            {-3, 3, 1, -1},
                                            {-1, -3, 3, 1},
                                            {1, -1, -3, 3},
                                            {-1, 1, 3, -3},
                                            {1, 3, -3, -1},
                                            {3, -3, -1, 1},
                                            {3, 1, -1, -3}});

    InitialVector enrz({-3, 1, 1, 1});
    RootSet rs3 = rootset_from_roots(enrz, {{-1, 3, -1, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}});
    std::vector<RatMatrix> gens3;
    for (const auto& d : rs3.diffs) gens3.push_back(reflection_matrix(d));
    Codebook w3 = build_codebook(enrz, generate_group(gens3));
    CHECK(row_set(w3.W) == std::set<IntVec>{{-3, 1, 1, 1},
                                            {1, -3, 1, 1},
                                            {1, 1, -3, 1},
                                            {1, 1, 1, -3},
                                            {3, -1, -1, -1},
                                            {-1, 3, -1, -1},
                                            {-1, -1, 3, -1},
                                            {-1, -1, -1, 3}});
    CHECK(rs3.uses_negation);
}

TEST_CASE("codebook rows are balanced, equal energy, negation closed, in the pm orbit") {
    for (const IntVec& init : std::vector<IntVec>{{-1, 0, 1}, {-3, 1, 1, 1}, {-2, -1, 0, 1, 2}}) {
        InitialVector w1(init);
        auto report = orthogonal_cliques(
            candidate_differences(w1, true), w1.n() - 1);
        RootSet rs = select_clique(report, w1);
        std::vector<RatMatrix> gens;
        for (const auto& d : rs.diffs) gens.push_back(reflection_matrix(d));
        Codebook book = build_codebook(w1, generate_group(gens));

        IntVec sorted_w1 = w1.components;
        std::sort(sorted_w1.begin(), sorted_w1.end());
        IntVec sorted_neg(sorted_w1.size());
        for (std::size_t i = 0; i < sorted_w1.size(); ++i)
            sorted_neg[i] = -sorted_w1[sorted_w1.size() - 1 - i];

        std::set<IntVec> rows = row_set(book.W);
        CHECK(rows.size() == book.size());
        for (const IntVec& row : rows) {
            long long sum = 0;
            for (long long x : row) sum += x;
            CHECK(sum == 0);
            CHECK(norm_sq(row) == w1.norm_sq());
            IntVec sorted_row = row;
            std::sort(sorted_row.begin(), sorted_row.end());
            bool in_orbit = sorted_row == sorted_w1 || sorted_row == sorted_neg;
            CHECK(in_orbit);
            IntVec neg_row(row.size());
            for (std::size_t i = 0; i < row.size(); ++i) neg_row[i] = -row[i];
            CHECK(rows.count(neg_row) == 1);
        }
    }
}

TEST_CASE("explicit rootset validation") {
    InitialVector w1({-1, 0, 1});
    CHECK_THROWS_AS(rootset_from_roots(w1, {{-1, 1, 0}, {0, 1, -1}}), DesignInfeasible);
    CHECK_THROWS_AS(rootset_from_roots(w1, {{-1, 0, 1}}), DesignInfeasible);
    CHECK_THROWS_AS(rootset_from_roots(w1, {{2, 0, -2}}), DesignInfeasible);
    RootSet ok = rootset_from_roots(w1, {{-1, 1, 0}});
    CHECK(ok.diffs == std::vector<IntVec>{{0, -1, 1}});
}
