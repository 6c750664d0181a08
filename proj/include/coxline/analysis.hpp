#pragma once

#include <span>
#include <vector>

#include "coxline/codec.hpp"

namespace coxline {

struct LineCode;

/// Per-slicer performance descriptors of a code. alpha_sq is exact; the
/// floating alphas are its square roots. Sum of alpha_sq equals b.
struct PerformanceProfile {
    int b = 0;
    std::vector<double> alphas;  // j = 2..b+1, in detection-row order
    RatVec alpha_sq;
    double alpha_min = 0;
    int nu = 0;                  // multiplicity of alpha_min (exact comparison)
    Rational d_min_sq;
    Rational energy_per_tuple;   // |W|_F^2 / 2^b
    RatVec eye_row;              // |W M^T| first-row magnitudes d_1..d_b
};

/// Evaluates both alpha formulas (the W M^T route and the root-distance
/// route), requires exact agreement, and verifies the uniform-error
/// property (all rows of |W M^T| identical).
PerformanceProfile compute_profile(const Codebook& w, const DetectionMatrix& det,
                                   const RootSet& rs);

PerformanceProfile alphas(const LineCode& code);

/// Gaussian tail probability Q(x).
double qfunc(double x);

/// p_e = 1 - prod_j (1 - Q(alpha_j sqrt(2 eta))).
double exact_word_error(const PerformanceProfile& p, double eta);

/// sum_j Q(alpha_j sqrt(2 eta)); never below exact_word_error.
double union_bound(const PerformanceProfile& p, double eta);

/// nu * Q(alpha_min sqrt(2 eta)), the high-SNR approximation.
double asymptotic_word_error(const PerformanceProfile& p, double eta);

/// eta = E_b/N0 = (|W|^2/2^b) / (b N0); these convert in both directions.
double noise_density_for_snr(const PerformanceProfile& p, double eta);
double snr_for_noise_density(const PerformanceProfile& p, double n0);

/// Exact minimum squared distance over all codeword pairs.
Rational codebook_min_distance(const Codebook& w);

struct ErrorCurve {
    struct Point {
        double eta;
        double p_exact;
        double p_union;
        double p_asymptotic;
    };
    std::vector<Point> points;
};

ErrorCurve error_curve(const PerformanceProfile& p, std::span<const double> etas);

}  // namespace coxline
