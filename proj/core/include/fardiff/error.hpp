#pragma once

#include <stdexcept>
#include <string>

namespace fardiff {

/// Failure classes surfaced by the library. The CLI maps Input and
/// Parameter to exit code 2 and Numeric to exit code 3.
enum class ErrorKind { Input, Parameter, Numeric };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message, std::string stage = {})
        : std::runtime_error(message), kind_(kind), stage_(std::move(stage)) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Pipeline stage that raised the error; empty outside the pipeline.
    const std::string& stage() const noexcept { return stage_; }

private:
    ErrorKind kind_;
    std::string stage_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string& message) : Error(ErrorKind::Input, message) {}
};

class ParameterError : public Error {
public:
    explicit ParameterError(const std::string& message) : Error(ErrorKind::Parameter, message) {}
};

class NumericError : public Error {
public:
    NumericError(const std::string& message, double residual)
        : Error(ErrorKind::Numeric, message), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

}  // namespace fardiff
