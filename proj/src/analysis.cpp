#include "coxline/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "coxline/design.hpp"
#include "coxline/errors.hpp"

namespace coxline {

PerformanceProfile compute_profile(const Codebook& w, const DetectionMatrix& det,
                                   const RootSet& rs) {
    PerformanceProfile profile;
    profile.b = w.b;
    const std::size_t rows = w.W.rows();
    const int b = w.b;

    RatMatrix wm = w.W * det.M.transpose();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < wm.cols(); ++j)
            if (abs(wm.at(i, j)) != abs(wm.at(0, j)))
                throw ProfileMismatch("uniform error probability violated: |W M^T| rows differ");

    profile.energy_per_tuple = w.W.frobenius_sq() / Rational(static_cast<long long>(rows));
    // |W|^2 / (b 2^b), the squared normalization of the alpha definition.
    Rational unit = profile.energy_per_tuple / Rational(b);

    const Rational w1_norm_sq = Rational(rs.w1.norm_sq());
    for (int j = 1; j <= b; ++j) {
        Rational eye = abs(wm.at(0, j));
        profile.eye_row.push_back(eye);
        Rational a_sq_detection = eye * eye / det.row_norms_sq[j] / unit;
        Rational a_sq_distance = Rational(b) * Rational(rs.norms_sq[j - 1]) / (Rational(4) * w1_norm_sq);
        if (a_sq_detection != a_sq_distance)
            throw ProfileMismatch("alpha formulas disagree on slicer " + std::to_string(j));
        profile.alpha_sq.push_back(a_sq_detection);
        profile.alphas.push_back(std::sqrt(a_sq_detection.to_double()));
    }

    Rational total;
    for (const auto& a : profile.alpha_sq) total += a;
    if (total != Rational(b))
        throw ProfileMismatch("sum of alpha^2 is " + total.str() + ", expected " + std::to_string(b));

    Rational min_sq = profile.alpha_sq.front();
    for (const auto& a : profile.alpha_sq) min_sq = std::min(min_sq, a);
    profile.nu = 0;
    for (const auto& a : profile.alpha_sq)
        if (a == min_sq) ++profile.nu;
    profile.alpha_min = std::sqrt(min_sq.to_double());

    profile.d_min_sq = codebook_min_distance(w);
    return profile;
}

PerformanceProfile alphas(const LineCode& code) {
    return compute_profile(code.codebook, code.detection, code.roots);
}

double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double exact_word_error(const PerformanceProfile& p, double eta) {
    const double s = std::sqrt(2.0 * eta);
    double prod = 1.0;
    for (double a : p.alphas) prod *= 1.0 - qfunc(a * s);
    return 1.0 - prod;
}

double union_bound(const PerformanceProfile& p, double eta) {
    const double s = std::sqrt(2.0 * eta);
    double sum = 0.0;
    for (double a : p.alphas) sum += qfunc(a * s);
    return sum;
}

double asymptotic_word_error(const PerformanceProfile& p, double eta) {
    return p.nu * qfunc(p.alpha_min * std::sqrt(2.0 * eta));
}

double noise_density_for_snr(const PerformanceProfile& p, double eta) {
    if (eta <= 0) throw Error("eta must be positive");
    return p.energy_per_tuple.to_double() / (p.b * eta);
}

double snr_for_noise_density(const PerformanceProfile& p, double n0) {
    if (n0 <= 0) throw Error("N0 must be positive");
    return p.energy_per_tuple.to_double() / (p.b * n0);
}

Rational codebook_min_distance(const Codebook& w) {
    if (w.W.rows() < 2) throw Error("codebook needs at least 2 words");
    // Group codes are distance uniform, so distances from row 0 suffice.
    Rational best;
    bool first = true;
    for (std::size_t i = 1; i < w.W.rows(); ++i) {
        Rational d;
        for (std::size_t j = 0; j < w.W.cols(); ++j) {
            Rational diff = w.W.at(0, j) - w.W.at(i, j);
            d += diff * diff;
        }
        if (first || d < best) {
            best = d;
            first = false;
        }
    }
    return best;
}

ErrorCurve error_curve(const PerformanceProfile& p, std::span<const double> etas) {
    ErrorCurve curve;
    curve.points.reserve(etas.size());
    for (double eta : etas)
        curve.points.push_back({eta, exact_word_error(p, eta), union_bound(p, eta),
                                asymptotic_word_error(p, eta)});
    return curve;
}

}  // namespace coxline
