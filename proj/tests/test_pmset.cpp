#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxline/errors.hpp"
#include "coxline/pmset.hpp"

using namespace coxline;

TEST_CASE("initial vector bookkeeping") {
    InitialVector w({1, -1, -3, -1, 1, 3});
    CHECK(w.n() == 6);
    CHECK(w.values == IntVec{-3, -1, 1, 3});
    CHECK(w.multiplicities == std::vector<int>{1, 2, 2, 1});
    CHECK(w.norm_sq() == 22);
    CHECK_THROWS_AS(InitialVector({1, 2, 3}), Error);
}

TEST_CASE("distinct permutations") {
    PMSet quad = distinct_permutations(InitialVector({-1, -1, 1, 1}));
    CHECK(quad.size() == 6);
    std::set<IntVec> got(quad.vectors.begin(), quad.vectors.end());
    std::set<IntVec> want = {{1, -1, 1, -1}, {-1, 1, 1, -1}, {-1, -1, 1, 1},
                             {1, -1, -1, 1}, {-1, 1, -1, 1}, {1, 1, -1, -1}};
    CHECK(got == want);

    PMSet tri = distinct_permutations(InitialVector({-1, 0, 1}));
    CHECK(tri.size() == 6);
    std::set<IntVec> tri_want = {{-1, 0, 1}, {-1, 1, 0}, {0, -1, 1},
                                 {1, 0, -1}, {0, 1, -1}, {1, -1, 0}};
    CHECK(std::set<IntVec>(tri.vectors.begin(), tri.vectors.end()) == tri_want);
    CHECK(std::is_sorted(tri.vectors.begin(), tri.vectors.end()));

    CHECK(distinct_permutations(InitialVector({1, -1, -3, -1, 1, 3})).size() == 180);
}

TEST_CASE("pm cardinality") {
    CHECK(pm_cardinality({2, 2}) == 6);
    CHECK(pm_cardinality({1, 1, 1, 1}) == 24);
    CHECK(pm_cardinality({2, 2, 1, 1}) == 180);
    CHECK_THROWS_AS(pm_cardinality({0, 2}), Error);
}

TEST_CASE("cardinality matches enumeration") {
    for (const IntVec& comps : std::vector<IntVec>{
             {-1, 0, 1}, {-1, -1, 1, 1}, {-3, 1, 1, 1}, {-2, -1, 0, 1, 2}, {0, 0, 0, 0}}) {
        InitialVector w(comps);
        CHECK(distinct_permutations(w).size() == pm_cardinality(w.multiplicities));
    }
}

TEST_CASE("permutations preserve multiset and energy") {
    InitialVector w({-2, -1, 0, 1, 2});
    IntVec sorted_w = w.components;
    std::sort(sorted_w.begin(), sorted_w.end());
    for (const IntVec& p : distinct_permutations(w).vectors) {
        IntVec s = p;
        std::sort(s.begin(), s.end());
        CHECK(s == sorted_w);
        CHECK(norm_sq(p) == w.norm_sq());
    }
}

TEST_CASE("initial vector from partition") {
    CHECK(initial_vector_from_partition({1, 1, 1, 1}, 3).components == IntVec{-3, -1, 1, 3});
    CHECK(initial_vector_from_partition({2, 1, 1}, 3).components == IntVec{-1, 0, 0, 1});
    CHECK(initial_vector_from_partition({3, 1}, 3).components == IntVec{-3, 1, 1, 1});
    CHECK(initial_vector_from_partition({2, 2}, 3).components == IntVec{-1, -1, 1, 1});
    CHECK(initial_vector_from_partition({1, 1}, 1).components == IntVec{-1, 1});
    CHECK_THROWS_AS(initial_vector_from_partition({2, 1}, 3), Error);
}

TEST_CASE("partition vectors are balanced with equally spaced values") {
    for (int b = 1; b <= 7; ++b) {
        // walk a few representative partitions by hand
        std::vector<std::vector<int>> parts;
        parts.push_back(std::vector<int>(b + 1, 1));
        if (b >= 1) parts.push_back({b, 1});
        if (b >= 3) parts.push_back({2, b - 1});
        for (const auto& p : parts) {
            InitialVector w = initial_vector_from_partition(p, b);
            long long sum = 0;
            for (long long c : w.components) sum += c;
            CHECK(sum == 0);
            for (std::size_t i = 2; i < w.values.size(); ++i)
                CHECK(w.values[i] - w.values[i - 1] == w.values[1] - w.values[0]);
        }
    }
}

TEST_CASE("pm minimum distance") {
    CHECK(pm_min_distance(distinct_permutations(InitialVector({-1, 0, 1}))) == Rational(2));
    CHECK(pm_min_distance(distinct_permutations(InitialVector({-1, -1, 1, 1}))) == Rational(8));
    CHECK(pm_min_distance(distinct_permutations(InitialVector({-3, -1, 1, 3}))) == Rational(8));
}
