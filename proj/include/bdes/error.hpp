#pragma once

#include <stdexcept>
#include <string>

namespace bdes {

/// Exit statuses shared by the CLI and the error hierarchy.
enum class ExitCode : int {
    success = 0,
    check_failure = 1,
    invalid_input = 2,
    resource_guard = 3,
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual ExitCode exit_code() const noexcept { return ExitCode::check_failure; }
};

class InvalidInput : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::invalid_input; }
};

/// A bijection was handed an object outside its avoider class.
class DomainViolation : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// An enumeration budget guard was exceeded.
class ResourceGuard : public Error {
public:
    using Error::Error;
    ExitCode exit_code() const noexcept override { return ExitCode::resource_guard; }
};

// Algebra failures. Inside the generating-function layer these mean a
// transcription bug, since the cancellations involved are theorems.
class NonInvertible : public Error {
public:
    using Error::Error;
};

class InexactDivision : public Error {
public:
    InexactDivision(const std::string& what, int x_power)
        : Error(what), x_power_(x_power) {}
    int x_power() const noexcept { return x_power_; }

private:
    int x_power_;
};

class DivergentComposition : public Error {
public:
    using Error::Error;
};

class Divergence : public Error {
public:
    using Error::Error;
};

class InternalConsistency : public Error {
public:
    using Error::Error;
};

}  // namespace bdes
