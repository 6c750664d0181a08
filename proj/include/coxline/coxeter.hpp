#pragma once

#include <vector>

#include "coxline/pmset.hpp"

namespace coxline {

/// One admissible root: a permutation of w1 (or of -w1) together with its
/// difference from w1.
struct RootCandidate {
    IntVec root;
    IntVec diff;       // w1 - root, never zero
    long long norm_sq; // |diff|^2
    bool from_negation;
};

/// A chosen set of b root permutations with mutually orthogonal
/// differences.
struct RootSet {
    InitialVector w1;
    std::vector<IntVec> roots;  // w_2 .. w_{b+1}
    std::vector<IntVec> diffs;  // d_i = w1 - w_{i+1}
    IntVec norms_sq;            // |d_i|^2
    bool uses_negation = false;

    int b() const { return static_cast<int>(roots.size()); }
};

/// All size-b cliques of the orthogonality graph over the candidates.
struct CliqueReport {
    std::vector<RootCandidate> candidates;
    std::vector<std::vector<int>> cliques;        // ascending member indices
    std::vector<IntVec> sorted_norms;             // per clique, |d|^2 ascending
    int b = 0;
};

/// Every difference w1 - p over the distinct permutations p of w1
/// (excluding w1 itself); with allow_negation also the permutations of
/// -w1, unless -w1 is itself a permutation of w1.
std::vector<RootCandidate> candidate_differences(const InitialVector& w1, bool allow_negation);

/// Enumerates all size-b cliques of the graph whose edges join candidate
/// pairs with exactly zero inner product. Deterministic order; throws
/// DesignInfeasible when none exist.
CliqueReport orthogonal_cliques(const std::vector<RootCandidate>& cands, int b);

/// Picks the clique whose ascending norm tuple is lexicographically
/// largest (largest minimum edge, then largest second smallest, ...);
/// remaining ties go to the earliest clique in enumeration order.
RootSet select_clique(const CliqueReport& report, const InitialVector& w1);

/// Builds a RootSet from explicitly given root permutations, validating
/// membership in the +-permutation orbit and mutual orthogonality of the
/// differences.
RootSet rootset_from_roots(const InitialVector& w1, const std::vector<IntVec>& roots);

/// Reflection about the hyperplane normal to d: I - 2 d d^T / <d,d>.
/// Symmetric, orthogonal, involutive, and exactly rational.
RatMatrix reflection_matrix(const IntVec& d);

struct ReflectionGroup {
    std::vector<RatMatrix> generators;
    std::vector<RatMatrix> elements;  // all 2^b subset products, identity first

    int b() const { return static_cast<int>(generators.size()); }
};

/// All subset products of pairwise commuting involutions, in binary
/// counting order over the generator indices (I, O1, O2, O1O2, O3, ...).
/// Verifies the relations O_i^2 = (O_i O_j)^2 = I.
ReflectionGroup generate_group(const std::vector<RatMatrix>& generators);

/// The 2^b x (b+1) codeword matrix; row k is w1 acted on by element k.
struct Codebook {
    RatMatrix W;
    int b = 0;

    std::size_t size() const { return W.rows(); }
};

Codebook build_codebook(const InitialVector& w1, const ReflectionGroup& g);

}  // namespace coxline
