#pragma once

#include <stdexcept>
#include <string>

namespace symsperner {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad index, dimension mismatch, malformed value.
struct ArgumentError : Error {
    using Error::Error;
};

/// Simplex budget exceeded by a requested subdivision depth.
struct BudgetError : Error {
    using Error::Error;
};

/// A structural invariant does not hold (degenerate simplex, affine-hull violation, ...).
struct InvariantViolation : Error {
    using Error::Error;
};

/// A preference oracle broke the full division assumption (or returned nothing).
struct AssumptionViolation : Error {
    using Error::Error;
};

/// Operation not defined for this input (e.g. owner labeling at depth 0).
struct UnsupportedError : Error {
    using Error::Error;
};

/// A named precondition of the fully-labeled search failed.
struct PreconditionError : Error {
    PreconditionError(std::string precondition, const std::string& detail)
        : Error(precondition + ": " + detail), precondition_(std::move(precondition)) {}
    const std::string& precondition() const noexcept { return precondition_; }

private:
    std::string precondition_;
};

/// No det-nonzero simplex was found although every hypothesis holds.
/// Carries a JSON dump of the full instance for replay.
struct TheoremViolation : Error {
    TheoremViolation(const std::string& what, std::string instance_json)
        : Error(what), instance_json_(std::move(instance_json)) {}
    const std::string& instance_json() const noexcept { return instance_json_; }

private:
    std::string instance_json_;
};

}  // namespace symsperner
