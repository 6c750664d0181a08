#include "coxline/document.hpp"

#include <fstream>

#include "coxline/errors.hpp"

namespace coxline {

namespace {

nlohmann::json mat_to_json(const RatMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMatrix mat_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw DocumentError("matrix field is not a non-empty array");
    RatMatrix m(j.size(), j.front().size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols())
            throw DocumentError("ragged matrix rows in document");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.at(i, c) = Rational::from_string(j[i][c].get<std::string>());
    }
    return m;
}

nlohmann::json ratvec_to_json(const RatVec& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

IntVec intvec_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw DocumentError("expected integer array");
    IntVec v;
    for (const auto& x : j) v.push_back(x.get<long long>());
    return v;
}

}  // namespace

nlohmann::json to_document(const LineCode& code) {
    nlohmann::json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["b"] = code.b;
    doc["n"] = code.b + 1;
    doc["w1"] = code.w1.components;
    doc["negation_used"] = code.roots.uses_negation;
    doc["root_permutations"] = code.roots.roots;
    doc["diffs"] = code.roots.diffs;

    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : code.group.generators) gens.push_back(mat_to_json(g));
    doc["generators"] = std::move(gens);

    doc["W"] = mat_to_json(code.codebook.W);
    doc["M"] = mat_to_json(code.detection.M);
    doc["B"] = mat_to_json(code.codec.B);
    doc["D"] = ratvec_to_json(code.codec.D);
    doc["K"] = mat_to_json(code.codec.K);

    nlohmann::json profile;
    profile["alphas"] = code.profile.alphas;
    profile["alpha_sq"] = ratvec_to_json(code.profile.alpha_sq);
    profile["alpha_min"] = code.profile.alpha_min;
    profile["nu"] = code.profile.nu;
    profile["d_min_sq"] = code.profile.d_min_sq.str();
    profile["energy_per_tuple"] = code.profile.energy_per_tuple.str();
    profile["eye"] = ratvec_to_json(code.profile.eye_row);
    profile["xi_sq"] = ratvec_to_json(code.detection.row_norms_sq);
    doc["profile"] = std::move(profile);

    doc["provenance"] = {{"tool", kToolName}, {"version", kToolVersion}};
    return doc;
}

LineCode code_from_document(const nlohmann::json& doc) {
    try {
        if (!doc.contains("schema_version") || doc["schema_version"].get<int>() != kSchemaVersion)
            throw DocumentError("unsupported or missing schema_version");

        InitialVector w1(intvec_from_json(doc.at("w1")));
        std::vector<IntVec> roots;
        for (const auto& r : doc.at("root_permutations")) roots.push_back(intvec_from_json(r));

        LineCode code = design_from_roots(w1, roots);
        if (code.b != doc.at("b").get<int>())
            throw DocumentError("stored b does not match the root count");

        if (mat_from_json(doc.at("W")) != code.codebook.W)
            throw DocumentError("stored W does not match the re-derived codebook");
        if (mat_from_json(doc.at("M")) != code.detection.M)
            throw DocumentError("stored M does not match the re-derived detection matrix");
        if (mat_from_json(doc.at("B")) != code.codec.B)
            throw DocumentError("stored B does not match the re-derived sign matrix");
        if (mat_from_json(doc.at("K")) != code.codec.K)
            throw DocumentError("stored K does not match the re-derived encoding matrix");
        const auto& djson = doc.at("D");
        if (djson.size() != code.codec.D.size())
            throw DocumentError("stored D has the wrong length");
        for (std::size_t i = 0; i < code.codec.D.size(); ++i)
            if (Rational::from_string(djson[i].get<std::string>()) != code.codec.D[i])
                throw DocumentError("stored D does not match the re-derived diagonal");
        const auto& gjson = doc.at("generators");
        if (gjson.size() != code.group.generators.size())
            throw DocumentError("stored generator count mismatch");
        for (std::size_t i = 0; i < gjson.size(); ++i)
            if (mat_from_json(gjson[i]) != code.group.generators[i])
                throw DocumentError("stored generator does not match the re-derived reflection");
        return code;
    } catch (const DocumentError&) {
        throw;
    } catch (const nlohmann::json::exception& e) {
        throw DocumentError(std::string("malformed design document: ") + e.what());
    } catch (const Error& e) {
        throw DocumentError(std::string("invalid design document: ") + e.what());
    }
}

void write_document(const LineCode& code, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << to_document(code).dump(2) << "\n";
}

LineCode load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot open design document '" + path + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw DocumentError(std::string("malformed JSON: ") + e.what());
    }
    return code_from_document(doc);
}

const std::vector<ReferenceDesign>& reference_designs() {
    static const std::vector<ReferenceDesign> table = {
        {1, {1, -1}, {{-1, 1}}},
        {2, {-1, 0, 1}, {{-1, 1, 0}, {1, -1, 0}}},
        {3, {-3, -1, 1, 3}, {{-3, 3, 1, -1}, {-1, -3, 3, 1}, {1, -1, -3, 3}}},
        {3, {-1, 0, 0, 1}, {{-1, 0, 1, 0}, {0, -1, 0, 1}, {0, 1, -1, 0}}},
        {3, {-3, 1, 1, 1}, {{-1, 3, -1, -1}, {-1, -1, 3, -1}, {-1, -1, -1, 3}}},
        {4,
         {-2, -1, 0, 1, 2},
         {{-2, 1, 0, -1, 2}, {-1, -2, 1, 0, 2}, {-1, 0, 1, 2, -2}, {0, -1, -2, 1, 2}}},
        {5,
         {1, -1, 3, -3, 5, -5},
         {{-1, 1, 5, -5, 3, -3},
          {3, -3, 1, -5, 5, -1},
          {3, -3, 5, -1, 1, -5},
          {3, 5, -3, -1, 1, -5},
          {-5, -3, 1, 3, 5, -1}}},
        {5,
         {-2, -1, 0, 0, 1, 2},
         {{-2, -1, 2, 0, 1, 0},
          {-2, 0, -1, 0, 2, 1},
          {-2, 1, 0, 0, -1, 2},
          {0, -2, -1, 2, 0, 1},
          {0, -1, 0, -2, 1, 2}}},
        {5,
         {1, -1, -3, -1, 1, 3},
         {{1, 1, -3, -1, -1, 3},
          {1, 1, -3, -1, 3, -1},
          {-1, -1, 1, -3, 1, 3},
          {-1, -1, -3, 1, 1, 3},
          {3, -3, -1, 1, -1, 1}}},
    };
    return table;
}

}  // namespace coxline
