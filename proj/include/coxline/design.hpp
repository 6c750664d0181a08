#pragma once

#include <string>
#include <vector>

#include "coxline/analysis.hpp"
#include "coxline/codec.hpp"
#include "coxline/coxeter.hpp"

namespace coxline {

enum class NegationMode { Auto, On, Off };

NegationMode negation_mode_from_string(const std::string& s);
std::string to_string(NegationMode m);

/// Complete design bundle: initial vector, chosen root permutations,
/// reflection generators, codebook W, detection matrix M, and the codec
/// factorization B, D, K with the performance profile.
struct LineCode {
    int b;
    InitialVector w1;
    RootSet roots;
    ReflectionGroup group;
    Codebook codebook;
    DetectionMatrix detection;
    CodecBundle codec;
    PerformanceProfile profile;
};

/// Assembles the full bundle from a validated root set.
LineCode build_line_code(const RootSet& rs);

/// Designs a code from an initial vector alone: enumerate candidate
/// differences, search orthogonal cliques, pick the best one. In Auto
/// mode the negated orbit joins the search exactly when the permutation
/// orbit is too small or yields no clique.
LineCode design_from_w1(const InitialVector& w1, NegationMode mode = NegationMode::Auto);

/// Same, but also hands back the clique report the selection came from.
LineCode design_from_w1(const InitialVector& w1, NegationMode mode, CliqueReport& report_out);

/// Builds the code for explicitly chosen root permutations.
LineCode design_from_roots(const InitialVector& w1, const std::vector<IntVec>& roots);

}  // namespace coxline
