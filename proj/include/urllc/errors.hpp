#pragma once

#include <stdexcept>
#include <string>

namespace urllc {

// Invalid model parameter (negative density, zero threshold, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of a function (d <= 0, x <= 0, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Queue with lambda / (c mu) >= 1.
struct StabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Quadrature or root-finding failure.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degenerate model, e.g. an arrival law with no vehicles.
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid sharing-matrix row or allocation request.
struct AllocationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed configuration; carries the offending line when known.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

}  // namespace urllc
