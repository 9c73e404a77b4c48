#pragma once

#include <stdexcept>
#include <string>

namespace q3roots {

/// Base class for all library errors. `kind()` is the stable machine-readable
/// name used by the CLI's JSON error objects.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

class RangeError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "RangeError"; }
};

class ConstructionError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ConstructionError"; }
};

class ZeroDivisionError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ZeroDivisionError"; }
};

class MembershipError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "MembershipError"; }
};

class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DomainError"; }
};

class PoleError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "PoleError"; }
};

class TraceConditionError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "TraceConditionError"; }
};

class ValidationError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ValidationError"; }
};

class FeasibilityError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "FeasibilityError"; }
};

/// A closed-form result failed its built-in re-verification. This is a bug,
/// never a recoverable condition.
class InternalError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "InternalError"; }
};

} // namespace q3roots
