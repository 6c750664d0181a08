#include "coxline/design.hpp"

#include "coxline/errors.hpp"

namespace coxline {

NegationMode negation_mode_from_string(const std::string& s) {
    if (s == "auto") return NegationMode::Auto;
    if (s == "on") return NegationMode::On;
    if (s == "off") return NegationMode::Off;
    throw Error("unknown negation mode '" + s + "' (expected auto|on|off)");
}

std::string to_string(NegationMode m) {
    switch (m) {
        case NegationMode::Auto: return "auto";
        case NegationMode::On: return "on";
        default: return "off";
    }
}

LineCode build_line_code(const RootSet& rs) {
    std::vector<RatMatrix> gens;
    gens.reserve(rs.diffs.size());
    for (const IntVec& d : rs.diffs) gens.push_back(reflection_matrix(d));

    ReflectionGroup group = generate_group(gens);
    Codebook codebook = build_codebook(rs.w1, group);
    DetectionMatrix det = detection_matrix(rs);
    CodecBundle codec = factor_bd(codebook, det);
    codec.K = encoding_matrix(codec, det);
    if (!(codec.B * codec.K == codebook.W))
        throw InternalCheckFailure("B K != W after factorization");
    PerformanceProfile profile = compute_profile(codebook, det, rs);

    return LineCode{rs.b(), rs.w1, rs, std::move(group), std::move(codebook),
                    std::move(det),  std::move(codec), std::move(profile)};
}

LineCode design_from_w1(const InitialVector& w1, NegationMode mode, CliqueReport& report_out) {
    const int b = w1.n() - 1;
    const unsigned long long needed = 1ull << b;
    const unsigned long long orbit = pm_cardinality(w1.multiplicities);

    bool negate_first;
    switch (mode) {
        case NegationMode::On: negate_first = true; break;
        case NegationMode::Off: negate_first = false; break;
        default: negate_first = orbit < needed; break;
    }

    try {
        report_out = orthogonal_cliques(candidate_differences(w1, negate_first), b);
    } catch (const DesignInfeasible&) {
        if (mode != NegationMode::Auto || negate_first) throw;
        // Auto mode: a PM-only search failed, retry with the negated orbit.
        report_out = orthogonal_cliques(candidate_differences(w1, true), b);
    }
    return build_line_code(select_clique(report_out, w1));
}

LineCode design_from_w1(const InitialVector& w1, NegationMode mode) {
    CliqueReport report;
    return design_from_w1(w1, mode, report);
}

LineCode design_from_roots(const InitialVector& w1, const std::vector<IntVec>& roots) {
    if (static_cast<int>(roots.size()) != w1.n() - 1)
        throw DesignInfeasible("invalid_roots",
                               "expected " + std::to_string(w1.n() - 1) + " root permutations");
    return build_line_code(rootset_from_roots(w1, roots));
}

}  // namespace coxline
