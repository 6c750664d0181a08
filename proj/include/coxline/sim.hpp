#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coxline/design.hpp"

namespace coxline {

struct SimConfig {
    std::vector<double> eta_grid;      // E_b/N0 values, linear scale
    std::uint64_t trials_per_point = 0;
    std::uint64_t seed = 0;
    int shards = 1;
    bool ml_oracle_check = false;      // cross-check slicer against nearest codeword
};

struct SimPoint {
    double eta = 0;
    std::uint64_t trials = 0;
    std::uint64_t word_errors = 0;
    std::uint64_t bit_errors = 0;
    double wer = 0;
    double ber = 0;
    double wilson_lo = 0;
    double wilson_hi = 0;
    double wilson_sigma = 0;   // interval half-width divided by z95
    double theory_exact = 0;
    double z_score = 0;        // (wer - theory) / binomial sigma at theory
    std::uint64_t ml_disagreements = 0;
    std::uint64_t ml_ties = 0;
    std::uint64_t ambiguous = 0;
};

struct SimResult {
    std::vector<SimPoint> points;
    std::string sampler = "splitmix64-polar";
    std::string streams = "per-trial";
    std::uint64_t seed = 0;
};

/// Monte Carlo run of encode -> AWGN -> slicer decode. Deterministic for
/// a given (code, config), independent of the shard count.
SimResult simulate(const LineCode& code, const SimConfig& cfg);

struct TheoryRow {
    double eta;
    double measured_wer;
    double wilson_lo;
    double wilson_hi;
    double p_exact;
    double p_union;
    double p_asymptotic;
    double z_score;
    bool flagged;  // |z| > 4
};

struct TheoryComparison {
    std::vector<TheoryRow> rows;
    bool any_flagged = false;
};

TheoryComparison compare_theory(const SimResult& result, const PerformanceProfile& profile);

/// 95% Wilson score interval.
struct WilsonInterval {
    double lo;
    double hi;
    double sigma;
};

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials);

}  // namespace coxline
