#include "coxline/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "coxline/errors.hpp"

namespace coxline {

std::vector<std::vector<int>> integer_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

// Ascending multiset of all pairwise squared distances, exact.
RatVec distance_spectrum(const Codebook& w) {
    RatVec spec;
    const std::size_t rows = w.W.rows();
    spec.reserve(rows * (rows - 1) / 2);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = i + 1; j < rows; ++j) {
            Rational d;
            for (std::size_t c = 0; c < w.W.cols(); ++c) {
                Rational diff = w.W.at(i, c) - w.W.at(j, c);
                d += diff * diff;
            }
            spec.push_back(d);
        }
    std::sort(spec.begin(), spec.end());
    return spec;
}

double alpha_flatness(const PerformanceProfile& p) {
    double worst = 0;
    for (double a : p.alphas) worst = std::max(worst, std::abs(a - 1.0));
    return worst;
}

}  // namespace

std::vector<DesignCandidate> enumerate_designs(int b, int max_b) {
    if (b < 1 || b > max_b)
        throw Error("b must be in 1.." + std::to_string(max_b));

    const unsigned long long needed = 1ull << b;
    std::vector<DesignCandidate> all;
    std::vector<RatVec> spectra;  // aligned with `all`, empty when infeasible

    for (const auto& partition : integer_partitions(b + 1)) {
        InitialVector w1 = initial_vector_from_partition(partition, b);
        DesignCandidate cand{partition, w1, false, "", std::nullopt, 0};

        unsigned long long orbit = pm_cardinality(w1.multiplicities);
        IntVec neg(w1.components.size());
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -w1.components[i];
        IntVec sorted_pos = w1.components, sorted_neg = neg;
        std::sort(sorted_pos.begin(), sorted_pos.end());
        std::sort(sorted_neg.begin(), sorted_neg.end());
        unsigned long long full_orbit = sorted_pos == sorted_neg ? orbit : 2 * orbit;

        if (full_orbit < needed) {
            cand.failure_reason = "pm_set_too_small";
        } else {
            try {
                CliqueReport report;
                LineCode code = design_from_w1(w1, NegationMode::Auto, report);
                cand.clique_count = report.cliques.size();
                cand.code = std::move(code);
                cand.feasible = true;
            } catch (const DesignInfeasible& e) {
                cand.failure_reason = e.reason;
            }
        }
        spectra.push_back(cand.feasible ? distance_spectrum(cand.code->codebook) : RatVec{});
        all.push_back(std::move(cand));
    }

    // Rank: d_min descending, then lexicographically larger distance
    // spectrum, then the alpha profile closest to all-ones; infeasible
    // entries keep partition order at the end.
    std::vector<std::size_t> order(all.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const DesignCandidate& a = all[x];
        const DesignCandidate& c = all[y];
        if (a.feasible != c.feasible) return a.feasible;
        if (!a.feasible) return false;
        const Rational& da = a.code->profile.d_min_sq;
        const Rational& dc = c.code->profile.d_min_sq;
        if (da != dc) return dc < da;
        if (spectra[x] != spectra[y]) return spectra[y] < spectra[x];
        double fa = alpha_flatness(a.code->profile);
        double fc = alpha_flatness(c.code->profile);
        if (fa != fc) return fa < fc;
        return false;
    });

    std::vector<DesignCandidate> ranked;
    ranked.reserve(all.size());
    for (std::size_t i : order) ranked.push_back(std::move(all[i]));
    return ranked;
}

std::vector<double> optimal_initial_vector(const RootSet& rs) {
    const std::size_t n = rs.w1.components.size();
    std::vector<double> opt(n, 0.0);
    for (std::size_t i = 0; i < rs.diffs.size(); ++i) {
        const double len = std::sqrt(static_cast<double>(rs.norms_sq[i]));
        for (std::size_t j = 0; j < n; ++j) opt[j] += rs.diffs[i][j] / len;
    }
    return opt;
}

std::vector<double> alpha_profile_for(const RootSet& rs, std::span<const double> v) {
    const double b = static_cast<double>(rs.b());
    double vnorm = 0;
    for (double x : v) vnorm += x * x;
    vnorm = std::sqrt(vnorm);
    if (vnorm == 0) throw Error("alpha profile of zero vector");
    std::vector<double> alpha(rs.diffs.size());
    for (std::size_t i = 0; i < rs.diffs.size(); ++i) {
        double d = 0;
        for (std::size_t j = 0; j < v.size(); ++j) d += rs.diffs[i][j] * v[j];
        alpha[i] = std::sqrt(b) * std::abs(d) /
                   (std::sqrt(static_cast<double>(rs.norms_sq[i])) * vnorm);
    }
    return alpha;
}

InitialVector integer_approximation(std::span<const double> w_opt, const RootSet& rs,
                                    int max_scale) {
    if (max_scale < 1) throw Error("max_scale must be >= 1");
    double balance = 0;
    for (double x : w_opt) balance += x;
    if (std::abs(balance) > 1e-9 * std::max(1, max_scale))
        throw Error("w_opt is not balanced");

    const std::size_t n = w_opt.size();
    bool found = false;
    IntVec best_vec;
    double best_dev = 0;

    for (int s = 1; s <= max_scale; ++s) {
        IntVec v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = std::llround(s * w_opt[i]);

        // Rebalance by undoing the worst rounding offenders first.
        long long sum = 0;
        for (long long x : v) sum += x;
        while (sum != 0) {
            std::size_t pick = 0;
            double extreme = 0;
            for (std::size_t i = 0; i < n; ++i) {
                double err = static_cast<double>(v[i]) - s * w_opt[i];
                if (i == 0 || (sum > 0 ? err > extreme : err < extreme)) {
                    extreme = err;
                    pick = i;
                }
            }
            v[pick] += sum > 0 ? -1 : 1;
            sum += sum > 0 ? -1 : 1;
        }

        bool zero = std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
        if (zero) continue;
        bool degenerate = false;
        for (const IntVec& d : rs.diffs)
            if (dot(d, v) == 0) { degenerate = true; break; }
        if (degenerate) continue;

        std::vector<double> vd(v.begin(), v.end());
        std::vector<double> alpha = alpha_profile_for(rs, vd);
        double dev = 0;
        for (double a : alpha) dev = std::max(dev, std::abs(a - 1.0));
        if (!found || dev < best_dev) {
            found = true;
            best_dev = dev;
            best_vec = v;
        }
    }

    if (!found)
        throw NoBalancedRounding("no scale in 1.." + std::to_string(max_scale) +
                                 " gives a usable balanced integer vector");
    return InitialVector(primitive(std::span<const long long>(best_vec)));
}

}  // namespace coxline
