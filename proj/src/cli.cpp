#include "coxline/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxline/document.hpp"
#include "coxline/errors.hpp"
#include "coxline/optimizer.hpp"
#include "coxline/sim.hpp"

namespace coxline {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string intvec_str(const IntVec& v) {
    std::vector<std::string> parts;
    for (long long x : v) parts.push_back(std::to_string(x));
    return "(" + join(parts, ",") + ")";
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    f << text;
}

std::vector<double> sorted_alphas(const PerformanceProfile& p) {
    std::vector<double> a = p.alphas;
    std::sort(a.begin(), a.end());
    return a;
}

std::string partition_str(const std::vector<int>& parts) {
    std::vector<std::string> s;
    for (int p : parts) s.push_back(std::to_string(p));
    return join(s, "+");
}

nlohmann::json candidate_summary(const std::vector<DesignCandidate>& cands) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : cands) {
        nlohmann::json j;
        j["partition"] = c.partition;
        j["w1"] = c.w1.components;
        j["feasible"] = c.feasible;
        if (c.feasible) {
            j["d_min_sq"] = c.code->profile.d_min_sq.str();
            j["alphas"] = sorted_alphas(c.code->profile);
            j["clique_count"] = c.clique_count;
            j["negation_used"] = c.code->roots.uses_negation;
        } else {
            j["reason"] = c.failure_reason;
        }
        arr.push_back(std::move(j));
    }
    return arr;
}

int cmd_design(const std::string& w1_str, int b, const std::string& roots_str,
               const std::string& negation, const std::string& output, std::ostream& out) {
    nlohmann::json doc;
    if (!w1_str.empty()) {
        InitialVector w1(parse_int_list(w1_str));
        if (!roots_str.empty()) {
            std::vector<IntVec> roots;
            for (const std::string& r : split(roots_str, ';')) roots.push_back(parse_int_list(r));
            doc = to_document(design_from_roots(w1, roots));
        } else {
            doc = to_document(design_from_w1(w1, negation_mode_from_string(negation)));
        }
    } else {
        std::vector<DesignCandidate> cands = enumerate_designs(b);
        auto best = std::find_if(cands.begin(), cands.end(),
                                 [](const DesignCandidate& c) { return c.feasible; });
        if (best == cands.end())
            throw DesignInfeasible("no_feasible_partition",
                                   "no partition of " + std::to_string(b + 1) +
                                       " yields a feasible design for b=" + std::to_string(b));
        doc = to_document(*best->code);
        doc["candidates"] = candidate_summary(cands);
    }
    emit(doc.dump(2) + "\n", output, out);
    return 0;
}

int cmd_search(int b, const std::string& format, const std::string& output, std::ostream& out) {
    std::vector<DesignCandidate> cands = enumerate_designs(b);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j;
        j["b"] = b;
        j["candidates"] = candidate_summary(cands);
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << "partition,w1,feasible,reason,d_min_sq,clique_count,alphas\n";
        for (const auto& c : cands) {
            os << partition_str(c.partition) << "," << intvec_str(c.w1.components) << ","
               << (c.feasible ? "yes" : "no") << ",";
            if (c.feasible) {
                std::vector<std::string> as;
                for (double a : sorted_alphas(c.code->profile)) as.push_back(fmt(a));
                os << "," << c.code->profile.d_min_sq.str() << "," << c.clique_count << ","
                   << join(as, ";") << "\n";
            } else {
                os << c.failure_reason << ",,,\n";
            }
        }
    } else {
        os << "designs for b=" << b << " (" << cands.size() << " partitions)\n";
        for (const auto& c : cands) {
            os << "  " << partition_str(c.partition) << "  w1=" << intvec_str(c.w1.components);
            if (c.feasible) {
                std::vector<std::string> as;
                for (double a : sorted_alphas(c.code->profile)) as.push_back(fmt2(a));
                os << "  d_min^2=" << c.code->profile.d_min_sq.str() << "  alphas=("
                   << join(as, ",") << ")"
                   << (c.code->roots.uses_negation ? "  [uses negation]" : "") << "\n";
            } else {
                os << "  infeasible: " << c.failure_reason << "\n";
            }
        }
    }
    emit(os.str(), output, out);
    return 0;
}

int cmd_analyze(const std::string& design_path, const std::string& eta_spec,
                const std::string& output, std::ostream& out) {
    LineCode code = load_document(design_path);
    std::vector<double> etas = parse_eta_grid(eta_spec);
    ErrorCurve curve = error_curve(code.profile, etas);
    std::ostringstream os;
    os << "eta,p_exact,p_union,p_asymptotic\n";
    for (const auto& p : curve.points)
        os << fmt(p.eta) << "," << fmt(p.p_exact) << "," << fmt(p.p_union) << ","
           << fmt(p.p_asymptotic) << "\n";
    emit(os.str(), output, out);
    return 0;
}

int cmd_simulate(const std::string& design_path, const std::string& eta_spec,
                 std::uint64_t trials, std::uint64_t seed, int shards, bool ml_check,
                 const std::string& output, std::ostream& out) {
    LineCode code = load_document(design_path);
    SimConfig cfg{parse_eta_grid(eta_spec), trials, seed, shards, ml_check};
    SimResult result = simulate(code, cfg);
    TheoryComparison cmp = compare_theory(result, code.profile);

    std::ostringstream os;
    os << "# " << kToolName << " " << kToolVersion << " seed=" << seed << " sampler="
       << result.sampler << " streams=" << result.streams << "\n";
    os << "eta,trials,word_errors,wer,wilson_lo,wilson_hi,ber,p_exact,p_union,p_asymptotic,"
          "z_score,ml_disagreements,ml_ties\n";
    for (std::size_t i = 0; i < result.points.size(); ++i) {
        const SimPoint& p = result.points[i];
        const TheoryRow& r = cmp.rows[i];
        os << fmt(p.eta) << "," << p.trials << "," << p.word_errors << "," << fmt(p.wer) << ","
           << fmt(p.wilson_lo) << "," << fmt(p.wilson_hi) << "," << fmt(p.ber) << ","
           << fmt(r.p_exact) << "," << fmt(r.p_union) << "," << fmt(r.p_asymptotic) << ","
           << fmt(p.z_score) << "," << p.ml_disagreements << "," << p.ml_ties << "\n";
    }
    emit(os.str(), output, out);
    return 0;
}

int cmd_table(int b_filter, const std::string& format, const std::string& output,
              std::ostream& out) {
    std::ostringstream os;
    nlohmann::json jrows = nlohmann::json::array();
    bool csv = format == "csv";
    bool json = format == "json";
    if (csv) os << "b,w1,root_permutations,alphas\n";
    if (!csv && !json) os << " b  w1 / root permutations          alphas\n";

    for (const auto& entry : reference_designs()) {
        if (b_filter > 0 && entry.b != b_filter) continue;
        LineCode code = design_from_roots(InitialVector(entry.w1), entry.roots);
        std::vector<double> a = sorted_alphas(code.profile);
        if (json) {
            nlohmann::json j;
            j["b"] = entry.b;
            j["w1"] = entry.w1;
            j["root_permutations"] = entry.roots;
            j["alphas"] = a;
            j["alphas_rounded"] = [&] {
                std::vector<std::string> r;
                for (double x : a) r.push_back(fmt2(x));
                return r;
            }();
            jrows.push_back(std::move(j));
        } else {
            std::vector<std::string> as, roots;
            for (double x : a) as.push_back(fmt2(x));
            for (const auto& r : entry.roots) roots.push_back(intvec_str(r));
            if (csv) {
                os << entry.b << "," << intvec_str(entry.w1) << "," << join(roots, "|") << ","
                   << join(as, ";") << "\n";
            } else {
                os << " " << entry.b << "  " << intvec_str(entry.w1) << "  alphas=("
                   << join(as, ",") << ")\n";
                for (const auto& r : roots) os << "      " << r << "\n";
            }
        }
    }
    if (json) os << jrows.dump(2) << "\n";
    emit(os.str(), output, out);
    return 0;
}

int report_failure(const Error& e, std::ostream& out, std::ostream& err) {
    nlohmann::json j;
    int code = 2;
    if (const auto* inf = dynamic_cast<const DesignInfeasible*>(&e)) {
        j["error"] = "design_infeasible";
        j["reason"] = inf->reason;
    } else if (dynamic_cast<const DocumentError*>(&e)) {
        j["error"] = "document_error";
    } else if (dynamic_cast<const RelationViolation*>(&e) ||
               dynamic_cast<const DegenerateGroup*>(&e) ||
               dynamic_cast<const DegenerateCodebook*>(&e) ||
               dynamic_cast<const NotOrthotope*>(&e) ||
               dynamic_cast<const ProfileMismatch*>(&e) ||
               dynamic_cast<const SingularMatrix*>(&e) ||
               dynamic_cast<const InternalCheckFailure*>(&e)) {
        j["error"] = "internal_invariant_violation";
        code = 3;
    } else {
        j["error"] = "invalid_input";
    }
    j["message"] = e.what();
    out << j.dump() << "\n";
    err << "error: " << e.what() << "\n";
    return code;
}

}  // namespace

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    for (const std::string& tok : split(text, ',')) {
        if (tok.empty()) throw Error("empty entry in integer list '" + text + "'");
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw Error("bad integer '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<double> parse_eta_grid(const std::string& spec) {
    std::vector<double> out;
    auto to_double = [](const std::string& tok) {
        std::size_t used = 0;
        double v = std::stod(tok, &used);
        if (used != tok.size()) throw Error("bad number '" + tok + "' in eta grid");
        return v;
    };
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts = split(spec, ':');
        if (parts.size() != 3) throw Error("eta range must be start:stop:step");
        double start = to_double(parts[0]);
        double stop = to_double(parts[1]);
        double step = to_double(parts[2]);
        if (step <= 0 || stop < start) throw Error("bad eta range '" + spec + "'");
        long long count = static_cast<long long>((stop - start) / step + 1e-9) + 1;
        for (long long i = 0; i < count; ++i) out.push_back(start + i * step);
    } else {
        for (const std::string& tok : split(spec, ',')) out.push_back(to_double(tok));
    }
    if (out.empty()) throw Error("empty eta grid");
    for (double e : out)
        if (e <= 0) throw Error("eta values must be positive");
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Line codes from reflection groups: design, analysis, simulation"};
    app.name("coxline");
    app.require_subcommand(1);

    std::string w1_str, roots_str, negation = "auto", output, format = "text";
    std::string design_path, eta_spec = "1:10:1";
    int b = 0, b_filter = 0, shards = 1;
    std::uint64_t trials = 100000, seed = 1;
    bool ml_check = false;

    auto* design = app.add_subcommand("design", "Design a code and write its document");
    design->add_option("--w1", w1_str, "initial vector, e.g. \"-1,0,1\"");
    design->add_option("--b", b, "bits per word; searches all partitions of b+1");
    design->add_option("--roots", roots_str, "explicit root permutations, ';'-separated");
    design->add_option("--allow-negation", negation, "auto|on|off")
        ->check(CLI::IsMember({"auto", "on", "off"}));
    design->add_option("--output", output, "write JSON here instead of stdout");

    auto* search = app.add_subcommand("search", "Rank all partition designs for a given b");
    search->add_option("--b", b, "bits per word")->required();
    search->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    search->add_option("--output", output);

    auto* analyze = app.add_subcommand("analyze", "Error-rate curves for a design document");
    analyze->add_option("--design", design_path)->required();
    analyze->add_option("--eta", eta_spec, "grid: \"a,b,c\" or \"start:stop:step\"");
    analyze->add_option("--output", output);

    auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo AWGN simulation");
    simulate_cmd->add_option("--design", design_path)->required();
    simulate_cmd->add_option("--eta", eta_spec);
    simulate_cmd->add_option("--trials", trials);
    simulate_cmd->add_option("--seed", seed);
    simulate_cmd->add_option("--shards", shards);
    simulate_cmd->add_flag("--ml-check", ml_check, "cross-check slicer against nearest codeword");
    simulate_cmd->add_option("--output", output);

    auto* table = app.add_subcommand("table", "Regenerate the reference design table");
    table->add_option("--b", b_filter, "only rows with this b");
    table->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));
    table->add_option("--output", output);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (design->parsed()) {
            if (w1_str.empty() && !design->count("--b"))
                throw Error("design needs --w1 or --b");
            return cmd_design(w1_str, b, roots_str, negation, output, out);
        }
        if (search->parsed()) return cmd_search(b, format, output, out);
        if (analyze->parsed()) return cmd_analyze(design_path, eta_spec, output, out);
        if (simulate_cmd->parsed())
            return cmd_simulate(design_path, eta_spec, trials, seed, shards, ml_check, output, out);
        if (table->parsed()) return cmd_table(b_filter, format, output, out);
        return 0;
    } catch (const Error& e) {
        return report_failure(e, out, err);
    }
}

}  // namespace coxline
