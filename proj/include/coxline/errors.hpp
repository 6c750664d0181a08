#pragma once

#include <stdexcept>
#include <string>

namespace coxline {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// Square matrix with rank < n; for a detection matrix this signals an
// invalid M.
struct SingularMatrix : Error {
    using Error::Error;
};

// The initial vector admits no set of b mutually orthogonal difference
// vectors (or too few permutations exist in the first place).
struct DesignInfeasible : Error {
    DesignInfeasible(std::string reason_code, const std::string& what)
        : Error(what), reason(std::move(reason_code)) {}
    std::string reason;
};

// A supposed generator set fails the involution/commutation relations.
struct RelationViolation : Error {
    using Error::Error;
};

// Subset products of the generators collide: group order below 2^b.
struct DegenerateGroup : Error {
    using Error::Error;
};

// Orbit of the initial vector has repeated points (w1 lies on a mirror).
struct DegenerateCodebook : Error {
    using Error::Error;
};

// W*M^T does not have column-constant magnitudes (0, +/-d1, ..., +/-db).
struct NotOrthotope : Error {
    using Error::Error;
};

// The two alpha formulas disagree, or the uniform-error property fails.
struct ProfileMismatch : Error {
    using Error::Error;
};

// No scale in range yields a usable balanced integer rounding.
struct NoBalancedRounding : Error {
    using Error::Error;
};

// A design document failed to parse or failed re-derivation checks.
struct DocumentError : Error {
    using Error::Error;
};

// A should-never-fail consistency check tripped; indicates a bug.
struct InternalCheckFailure : Error {
    using Error::Error;
};

}  // namespace coxline
