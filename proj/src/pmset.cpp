#include "coxline/pmset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "coxline/errors.hpp"

namespace coxline {

InitialVector::InitialVector(IntVec comps) : components(std::move(comps)) {
    if (components.size() < 2) throw Error("initial vector needs at least 2 components");
    long long sum = std::accumulate(components.begin(), components.end(), 0LL);
    if (sum != 0) throw Error("initial vector is not balanced (component sum != 0)");
    std::map<long long, int> counts;
    for (long long c : components) ++counts[c];
    for (const auto& [v, m] : counts) {
        values.push_back(v);
        multiplicities.push_back(m);
    }
}

long long InitialVector::norm_sq() const { return coxline::norm_sq(components); }

PMSet distinct_permutations(const InitialVector& w1) {
    IntVec v = w1.components;
    std::sort(v.begin(), v.end());
    std::vector<IntVec> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return PMSet{w1, std::move(out)};
}

unsigned long long pm_cardinality(const std::vector<int>& multiplicities) {
    int n = 0;
    for (int m : multiplicities) {
        if (m < 1) throw Error("multiplicities must be >= 1");
        n += m;
    }
    if (n > 20) throw Error("pm_cardinality limited to n <= 20");
    // Product of binomials C(m_1+...+m_i, m_i); each factor stays exact.
    unsigned long long result = 1;
    int used = 0;
    for (int m : multiplicities) {
        used += m;
        unsigned long long c = 1;
        for (int i = 1; i <= m; ++i) {
            c = c * static_cast<unsigned long long>(used - m + i) / i;
        }
        result *= c;
    }
    return result;
}

InitialVector initial_vector_from_partition(const std::vector<int>& partition, int b) {
    const int n = b + 1;
    int total = 0;
    for (int m : partition) {
        if (m < 1) throw Error("partition parts must be >= 1");
        total += m;
    }
    if (total != n) throw Error("partition parts must sum to b+1");

    const int k = static_cast<int>(partition.size());
    if (k == 1) return InitialVector(IntVec(n, 0));

    // Smallest multiplicity on the smallest value, second smallest on the
    // largest, third on the second smallest, alternating inward.
    std::vector<int> sorted_ms = partition;
    std::stable_sort(sorted_ms.begin(), sorted_ms.end());
    std::vector<int> mult(k, 0);
    for (int t = 0; t < k; ++t) {
        int slot = (t % 2 == 0) ? t / 2 : k - 1 - t / 2;
        mult[slot] = sorted_ms[t];
    }

    // Provisional equally spaced values 0..k-1, recentered so the weighted
    // sum vanishes, then cleared to coprime integers.
    Rational mean;
    for (int s = 0; s < k; ++s) mean += Rational(mult[s]) * Rational(s);
    mean /= Rational(n);
    RatVec comps;
    comps.reserve(n);
    for (int s = 0; s < k; ++s)
        for (int r = 0; r < mult[s]; ++r) comps.push_back(Rational(s) - mean);
    return InitialVector(primitive(comps));
}

Rational pm_min_distance(const PMSet& s) {
    if (s.size() < 2) throw Error("pm_min_distance needs at least 2 vectors");
    long long best = -1;
    for (std::size_t i = 0; i < s.vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < s.vectors.size(); ++j) {
            long long d = 0;
            for (std::size_t c = 0; c < s.vectors[i].size(); ++c) {
                long long diff = s.vectors[i][c] - s.vectors[j][c];
                d += diff * diff;
            }
            if (best < 0 || d < best) best = d;
        }
    }
    return Rational(best);
}

}  // namespace coxline
