#pragma once

#include <string>

#include <json.hpp>

#include "coxline/design.hpp"

namespace coxline {

inline constexpr const char* kToolName = "coxline";
inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Self-contained design document. Rationals travel as "p" or "p/q"
/// strings so nothing is lost to floating point.
nlohmann::json to_document(const LineCode& code);

/// Rebuilds the code from the document's initial vector and roots, then
/// checks that every stored matrix matches the re-derived one exactly.
/// Throws DocumentError on parse or verification failure.
LineCode code_from_document(const nlohmann::json& doc);

void write_document(const LineCode& code, const std::string& path);
LineCode load_document(const std::string& path);

/// Catalog of known-good reference designs (the performance table the
/// tool can regenerate end to end).
struct ReferenceDesign {
    int b;
    IntVec w1;
    std::vector<IntVec> roots;
};

const std::vector<ReferenceDesign>& reference_designs();

}  // namespace coxline
