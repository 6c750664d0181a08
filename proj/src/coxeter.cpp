#include "coxline/coxeter.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "coxline/errors.hpp"

namespace coxline {

namespace {

IntVec negated(const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

bool same_multiset(const IntVec& a, const IntVec& b) {
    IntVec sa = a, sb = b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
}

// Flat bitset rows for the orthogonality graph.
struct AdjacencyBits {
    std::size_t v = 0;
    std::size_t words = 0;
    std::vector<std::uint64_t> bits;

    explicit AdjacencyBits(std::size_t vertices)
        : v(vertices), words((vertices + 63) / 64), bits(vertices * words, 0) {}

    void set(std::size_t i, std::size_t j) { bits[i * words + (j >> 6)] |= 1ull << (j & 63); }
    const std::uint64_t* row(std::size_t i) const { return bits.data() + i * words; }
};

int popcount_words(const std::uint64_t* w, std::size_t n) {
    int c = 0;
    for (std::size_t i = 0; i < n; ++i) c += std::popcount(w[i]);
    return c;
}

}  // namespace

std::vector<RootCandidate> candidate_differences(const InitialVector& w1, bool allow_negation) {
    std::vector<RootCandidate> out;
    auto add_from = [&](const InitialVector& source, bool neg) {
        for (const IntVec& p : distinct_permutations(source).vectors) {
            if (p == w1.components) continue;
            IntVec diff(p.size());
            for (std::size_t i = 0; i < p.size(); ++i) diff[i] = w1.components[i] - p[i];
            long long nsq = norm_sq(diff);
            out.push_back(RootCandidate{p, std::move(diff), nsq, neg});
        }
    };
    add_from(w1, false);
    if (allow_negation) {
        IntVec neg = negated(w1.components);
        // When -w1 is itself a permutation of w1 the negated orbit adds
        // nothing new.
        if (!same_multiset(neg, w1.components)) add_from(InitialVector(neg), true);
    }
    return out;
}

CliqueReport orthogonal_cliques(const std::vector<RootCandidate>& cands, int b) {
    if (b < 1) throw Error("b must be >= 1");
    const std::size_t v = cands.size();
    if (v > 60000)
        throw Error("candidate graph too large for exhaustive clique search (" +
                    std::to_string(v) + " vertices)");

    CliqueReport report;
    report.candidates = cands;
    report.b = b;

    if (v < static_cast<std::size_t>(b)) {
        throw DesignInfeasible("no_orthogonal_clique",
                               "fewer candidates than the " + std::to_string(b) +
                                   " orthogonal differences required");
    }

    AdjacencyBits adj(v);
    for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = i + 1; j < v; ++j) {
            if (dot(cands[i].diff, cands[j].diff) == 0) {
                adj.set(i, j);
                adj.set(j, i);
            }
        }
    }

    const std::size_t words = adj.words;
    std::vector<int> members;
    members.reserve(b);
    // One candidate-set buffer per recursion depth.
    std::vector<std::vector<std::uint64_t>> pool(b + 1, std::vector<std::uint64_t>(words));

    auto collect = [&](const std::uint64_t* p, std::vector<int>& out) {
        out.clear();
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t x = p[w];
            while (x) {
                out.push_back(static_cast<int>((w << 6) + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    };

    std::vector<std::vector<int>> idxs(b + 1);
    auto extend = [&](auto&& self, int depth) -> void {
        if (depth == b) {
            report.cliques.push_back(members);
            return;
        }
        const int needed = b - depth;
        std::vector<int>& order = idxs[depth];
        collect(pool[depth].data(), order);
        for (std::size_t pos = 0; pos < order.size(); ++pos) {
            if (static_cast<int>(order.size() - pos) < needed) break;
            const int u = order[pos];
            members.push_back(u);
            if (depth + 1 == b) {
                report.cliques.push_back(members);
            } else {
                // Candidates after u that are adjacent to the whole clique.
                auto& next = pool[depth + 1];
                const std::uint64_t* cur = pool[depth].data();
                const std::uint64_t* row = adj.row(u);
                const std::size_t uw = static_cast<std::size_t>(u) >> 6;
                for (std::size_t w = 0; w < words; ++w) {
                    if (w < uw)
                        next[w] = 0;
                    else if (w == uw)
                        next[w] = cur[w] & row[w] & ~((2ull << (u & 63)) - 1);
                    else
                        next[w] = cur[w] & row[w];
                }
                if (popcount_words(next.data(), words) >= needed - 1) self(self, depth + 1);
            }
            members.pop_back();
        }
    };

    if (b == 1) {
        for (std::size_t i = 0; i < v; ++i) report.cliques.push_back({static_cast<int>(i)});
    } else {
        for (std::size_t i = 0; i + b <= v; ++i) {
            members.assign(1, static_cast<int>(i));
            auto& p0 = pool[1];
            const std::uint64_t* row = adj.row(i);
            const std::size_t iw = i >> 6;
            for (std::size_t w = 0; w < words; ++w) {
                if (w < iw)
                    p0[w] = 0;
                else if (w == iw)
                    p0[w] = row[w] & ~((2ull << (i & 63)) - 1);
                else
                    p0[w] = row[w];
            }
            if (popcount_words(p0.data(), words) >= b - 1) extend(extend, 1);
        }
    }

    if (report.cliques.empty()) {
        throw DesignInfeasible("no_orthogonal_clique",
                               "no set of " + std::to_string(b) +
                                   " mutually orthogonal differences exists for this initial vector");
    }

    report.sorted_norms.reserve(report.cliques.size());
    for (const auto& c : report.cliques) {
        IntVec norms;
        norms.reserve(c.size());
        for (int m : c) norms.push_back(cands[m].norm_sq);
        std::sort(norms.begin(), norms.end());
        report.sorted_norms.push_back(std::move(norms));
    }
    return report;
}

RootSet select_clique(const CliqueReport& report, const InitialVector& w1) {
    if (report.cliques.empty()) throw Error("empty clique report");
    std::size_t best = 0;
    for (std::size_t i = 1; i < report.cliques.size(); ++i) {
        // Lexicographic max over ascending norm tuples: largest minimum,
        // then largest second smallest, and so on.
        if (report.sorted_norms[i] > report.sorted_norms[best]) best = i;
    }
    RootSet rs{w1, {}, {}, {}, false};
    for (int m : report.cliques[best]) {
        const RootCandidate& c = report.candidates[m];
        rs.roots.push_back(c.root);
        rs.diffs.push_back(c.diff);
        rs.norms_sq.push_back(c.norm_sq);
        rs.uses_negation = rs.uses_negation || c.from_negation;
    }
    return rs;
}

RootSet rootset_from_roots(const InitialVector& w1, const std::vector<IntVec>& roots) {
    if (roots.empty()) throw Error("at least one root permutation required");
    IntVec neg = negated(w1.components);
    RootSet rs{w1, {}, {}, {}, false};
    for (const IntVec& r : roots) {
        if (r.size() != w1.components.size())
            throw DesignInfeasible("invalid_roots", "root length differs from initial vector");
        bool of_w1 = same_multiset(r, w1.components);
        bool of_neg = !of_w1 && same_multiset(r, neg);
        if (!of_w1 && !of_neg)
            throw DesignInfeasible("invalid_roots",
                                   "root is not a permutation of the initial vector or its negation");
        if (r == w1.components)
            throw DesignInfeasible("invalid_roots", "root equals the initial vector");
        IntVec diff(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) diff[i] = w1.components[i] - r[i];
        rs.norms_sq.push_back(norm_sq(diff));
        rs.diffs.push_back(std::move(diff));
        rs.roots.push_back(r);
        rs.uses_negation = rs.uses_negation || of_neg;
    }
    for (std::size_t i = 0; i < rs.diffs.size(); ++i)
        for (std::size_t j = i + 1; j < rs.diffs.size(); ++j)
            if (dot(rs.diffs[i], rs.diffs[j]) != 0)
                throw DesignInfeasible("invalid_roots",
                                       "root differences are not mutually orthogonal");
    return rs;
}

RatMatrix reflection_matrix(const IntVec& d) {
    const long long nsq = norm_sq(d);
    if (nsq == 0) throw Error("reflection about zero vector");
    const std::size_t n = d.size();
    RatMatrix o(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            o.at(i, j) = Rational(-2 * d[i] * d[j], nsq);
            if (i == j) o.at(i, j) += 1;
        }
    return o;
}

ReflectionGroup generate_group(const std::vector<RatMatrix>& generators) {
    if (generators.empty()) throw Error("no generators");
    const std::size_t n = generators.front().rows();
    for (const auto& g : generators)
        if (g.rows() != n || g.cols() != n)
            throw DimensionMismatch("generators must be square and equally sized");

    const RatMatrix id = RatMatrix::identity(n);
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (!(generators[i] * generators[i] == id))
            throw RelationViolation("generator " + std::to_string(i + 1) + " is not an involution");
        for (std::size_t j = i + 1; j < generators.size(); ++j) {
            RatMatrix p = generators[i] * generators[j];
            if (!(p * p == id))
                throw RelationViolation("generators " + std::to_string(i + 1) + " and " +
                                        std::to_string(j + 1) + " do not commute");
        }
    }

    const int b = static_cast<int>(generators.size());
    const std::size_t order = 1ull << b;
    ReflectionGroup group{generators, {}};
    group.elements.reserve(order);
    group.elements.push_back(id);
    for (std::size_t k = 1; k < order; ++k) {
        const int low = std::countr_zero(k);
        group.elements.push_back(generators[low] * group.elements[k ^ (1ull << low)]);
    }
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i + 1; j < order; ++j)
            if (group.elements[i] == group.elements[j])
                throw DegenerateGroup("subset products collide; group order below 2^b");
    return group;
}

Codebook build_codebook(const InitialVector& w1, const ReflectionGroup& g) {
    const std::size_t n = w1.components.size();
    const std::size_t order = g.elements.size();
    RatMatrix w1row = RatMatrix::row_vector(std::span<const long long>(w1.components));
    RatMatrix W(order, n);
    for (std::size_t k = 0; k < order; ++k) {
        RatMatrix row = w1row * g.elements[k];
        for (std::size_t j = 0; j < n; ++j) W.at(k, j) = row.at(0, j);
    }
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i + 1; j < order; ++j)
            if (W.row(i) == W.row(j))
                throw DegenerateCodebook("codebook rows collide (initial vector lies on a mirror)");
    return Codebook{std::move(W), g.b()};
}

}  // namespace coxline
