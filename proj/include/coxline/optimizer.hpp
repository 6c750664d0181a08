#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxline/design.hpp"

namespace coxline {

/// One partition of b+1 evaluated as a code design. Infeasible entries
/// carry the failure reason instead of a code.
struct DesignCandidate {
    std::vector<int> partition;  // parts descending
    InitialVector w1;
    bool feasible = false;
    std::string failure_reason;  // "pm_set_too_small" | "no_orthogonal_clique" | ...
    std::optional<LineCode> code;
    std::size_t clique_count = 0;
};

/// All integer partitions of n, parts descending, enumerated in
/// descending lexicographic order ([n], [n-1,1], ...).
std::vector<std::vector<int>> integer_partitions(int n);

/// One candidate per partition of b+1. Feasible candidates are fully
/// built (best clique selected) and sorted first: by d_min descending,
/// then by the codebook distance spectrum, then by the alpha profile
/// closest to all-ones. Infeasible candidates follow in partition order.
std::vector<DesignCandidate> enumerate_designs(int b, int max_b = 8);

/// Sum of the unit root differences: the initial vector that turns the
/// orthotope into a hypercube (all alpha = 1). Generally irrational.
std::vector<double> optimal_initial_vector(const RootSet& rs);

/// Alpha profile of an arbitrary initial vector under the fixed
/// reflection structure of rs: sqrt(b) |<delta_j, v>| / |v|.
std::vector<double> alpha_profile_for(const RootSet& rs, std::span<const double> v);

/// Best balanced integer rounding of s * w_opt over scales s = 1..max_scale,
/// minimizing max_j |alpha_j - 1| under the reflection structure of rs.
/// Throws NoBalancedRounding when no scale gives a usable vector.
InitialVector integer_approximation(std::span<const double> w_opt, const RootSet& rs,
                                    int max_scale);

}  // namespace coxline
