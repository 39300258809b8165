#pragma once

#include <stdexcept>
#include <string>

namespace haff {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GradeOverflow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GradeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Group-spec validation failures. The CLI maps these to exit code 3 and the
// message names the violated invariant.
struct SpecValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct HormanderViolation : SpecValidationError {
    using SpecValidationError::SpecValidationError;
};

struct NotAnIdeal : SpecValidationError {
    using SpecValidationError::SpecValidationError;
};

struct TrivialV2 : SpecValidationError {
    using SpecValidationError::SpecValidationError;
};

struct UnderdeterminedSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace haff
