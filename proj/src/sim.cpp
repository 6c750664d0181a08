#include "coxline/sim.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "coxline/errors.hpp"
#include "coxline/rng.hpp"

namespace coxline {

namespace {

constexpr double kZ95 = 1.959963984540054;

struct Tally {
    std::uint64_t word_errors = 0;
    std::uint64_t bit_errors = 0;
    std::uint64_t ml_disagreements = 0;
    std::uint64_t ml_ties = 0;
    std::uint64_t ambiguous = 0;

    void merge(const Tally& o) {
        word_errors += o.word_errors;
        bit_errors += o.bit_errors;
        ml_disagreements += o.ml_disagreements;
        ml_ties += o.ml_ties;
        ambiguous += o.ambiguous;
    }
};

void run_trials(const std::vector<double>& words, int n, int b, const Slicer& slicer,
                double sigma, bool ml_check, std::uint64_t seed, std::uint64_t point,
                std::uint64_t first, std::uint64_t last, Tally& tally) {
    const std::size_t count = 1ull << b;
    std::vector<double> y(n);
    for (std::uint64_t t = first; t < last; ++t) {
        SplitMix64 rng = trial_stream(seed, point, t);
        const std::size_t k = rng.next() >> (64 - b);
        const double* tx = words.data() + k * n;
        for (int j = 0; j < n; j += 2) {
            GaussianPair g = gaussian_pair(rng);
            y[j] = tx[j] + sigma * g.first;
            if (j + 1 < n) y[j + 1] = tx[j + 1] + sigma * g.second;
        }
        DecodeResult res = decode(y, slicer);
        if (res.ambiguous) ++tally.ambiguous;

        int wrong = 0;
        for (int j = 0; j < b; ++j)
            if (res.bits[j] != ((k >> j) & 1 ? -1 : 1)) ++wrong;
        if (wrong > 0) ++tally.word_errors;
        tally.bit_errors += wrong;

        if (ml_check) {
            std::size_t best = 0;
            double best_d = 0;
            bool tie = false;
            for (std::size_t i = 0; i < count; ++i) {
                const double* w = words.data() + i * n;
                double d = 0;
                for (int j = 0; j < n; ++j) d += (y[j] - w[j]) * (y[j] - w[j]);
                if (i == 0 || d < best_d) {
                    best = i;
                    best_d = d;
                    tie = false;
                } else if (d == best_d) {
                    tie = true;
                }
            }
            if (tie || res.ambiguous) {
                ++tally.ml_ties;
            } else if (row_index_for_bits(res.bits) != best) {
                ++tally.ml_disagreements;
            }
        }
    }
}

}  // namespace

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) throw Error("wilson interval needs trials > 0");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double sigma = std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    const double half = kZ95 * sigma;
    return {std::max(0.0, center - half), std::min(1.0, center + half), sigma};
}

SimResult simulate(const LineCode& code, const SimConfig& cfg) {
    if (cfg.trials_per_point < 1) throw Error("trials_per_point must be >= 1");
    for (double eta : cfg.eta_grid)
        if (eta <= 0) throw Error("eta values must be positive");

    const int b = code.b;
    const int n = b + 1;
    const std::vector<double> words = code.codebook.W.to_doubles();
    const Slicer slicer = make_slicer(code.detection);
    const int shards = std::max(1, cfg.shards);

    SimResult result;
    result.seed = cfg.seed;
    for (std::size_t point = 0; point < cfg.eta_grid.size(); ++point) {
        const double eta = cfg.eta_grid[point];
        const double n0 = noise_density_for_snr(code.profile, eta);
        const double sigma = std::sqrt(n0 / 2.0);
        const std::uint64_t trials = cfg.trials_per_point;

        std::vector<Tally> partial(shards);
        {
            std::vector<std::thread> workers;
            workers.reserve(shards);
            for (int s = 0; s < shards; ++s) {
                const std::uint64_t first = trials * s / shards;
                const std::uint64_t last = trials * (s + 1) / shards;
                workers.emplace_back(run_trials, std::cref(words), n, b, std::cref(slicer),
                                     sigma, cfg.ml_oracle_check, cfg.seed, point, first, last,
                                     std::ref(partial[s]));
            }
            for (auto& w : workers) w.join();
        }
        Tally tally;
        for (const Tally& p : partial) tally.merge(p);

        SimPoint sp;
        sp.eta = eta;
        sp.trials = trials;
        sp.word_errors = tally.word_errors;
        sp.bit_errors = tally.bit_errors;
        sp.wer = static_cast<double>(tally.word_errors) / static_cast<double>(trials);
        sp.ber = static_cast<double>(tally.bit_errors) / (static_cast<double>(trials) * b);
        WilsonInterval wi = wilson_interval(tally.word_errors, trials);
        sp.wilson_lo = wi.lo;
        sp.wilson_hi = wi.hi;
        sp.wilson_sigma = wi.sigma;
        sp.theory_exact = exact_word_error(code.profile, eta);
        const double var = sp.theory_exact * (1.0 - sp.theory_exact) / static_cast<double>(trials);
        sp.z_score = var > 0 ? (sp.wer - sp.theory_exact) / std::sqrt(var) : 0.0;
        sp.ml_disagreements = tally.ml_disagreements;
        sp.ml_ties = tally.ml_ties;
        sp.ambiguous = tally.ambiguous;
        result.points.push_back(sp);
    }
    return result;
}

TheoryComparison compare_theory(const SimResult& result, const PerformanceProfile& profile) {
    TheoryComparison cmp;
    for (const SimPoint& p : result.points) {
        TheoryRow row;
        row.eta = p.eta;
        row.measured_wer = p.wer;
        row.wilson_lo = p.wilson_lo;
        row.wilson_hi = p.wilson_hi;
        row.p_exact = exact_word_error(profile, p.eta);
        row.p_union = union_bound(profile, p.eta);
        row.p_asymptotic = asymptotic_word_error(profile, p.eta);
        row.z_score = p.z_score;
        row.flagged = std::abs(p.z_score) > 4.0;
        cmp.any_flagged = cmp.any_flagged || row.flagged;
        cmp.rows.push_back(row);
    }
    return cmp;
}

}  // namespace coxline
