#pragma once

#include <vector>

#include "coxline/matrix.hpp"

namespace coxline {

/// Balanced integer initial vector. Components keep the caller's order;
/// the distinct values and their multiplicities are derived on
/// construction (values ascending).
struct InitialVector {
    IntVec components;
    IntVec values;                    // distinct, ascending
    std::vector<int> multiplicities;  // aligned with values

    explicit InitialVector(IntVec comps);

    int n() const { return static_cast<int>(components.size()); }
    long long norm_sq() const;

    bool operator==(const InitialVector& o) const { return components == o.components; }
};

/// Variant-I permutation-modulation set: all distinct permutations of the
/// initial vector.
struct PMSet {
    InitialVector initial;
    std::vector<IntVec> vectors;  // lexicographic order

    std::size_t size() const { return vectors.size(); }
};

PMSet distinct_permutations(const InitialVector& w1);

/// n! / (m_1! m_2! ... m_r!) for n = sum of the multiplicities.
unsigned long long pm_cardinality(const std::vector<int>& multiplicities);

/// Builds the optimal initial vector for a multiplicity partition of
/// b+1: equally spaced values, smallest multiplicity on the smallest
/// value, next smallest on the largest, and so on alternating inward;
/// shifted to balance and scaled to the smallest integer realization.
InitialVector initial_vector_from_partition(const std::vector<int>& partition, int b);

/// Minimum squared Euclidean distance over all pairs, exact.
Rational pm_min_distance(const PMSet& s);

}  // namespace coxline
