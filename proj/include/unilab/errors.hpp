#pragma once

#include <stdexcept>
#include <string>

namespace unilab {

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NonPowerOfTwo : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidL : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NegativeLambda : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadAspect : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ExplicitTooLarge : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedEnsemble : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedKind : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadGamma : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadProbabilities : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ZeroSignal : std::domain_error {
    using std::domain_error::domain_error;
};

struct ProxDiverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDivergenceFree : std::logic_error {
    using std::logic_error::logic_error;
};

struct SingularSigma : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MCVarianceTooHigh : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Power iteration failed to meet its tolerance; carries the last estimate.
struct NoConvergence : std::runtime_error {
    double last_estimate;
    explicit NoConvergence(const std::string& what, double estimate)
        : std::runtime_error(what), last_estimate(estimate) {}
};

}  // namespace unilab
