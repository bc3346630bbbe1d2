#pragma once

#include <stdexcept>
#include <string>

namespace bohrlab {

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidRadius : DomainError {
    using DomainError::DomainError;
};

struct NonSchwarzInner : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvaluationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PoleProximity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDerivative : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateOmittedPoints : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroDetected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownSuite : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct MissingData : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bohrlab
