#pragma once

#include <stdexcept>
#include <string>

namespace mgrowth {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two elements (or vertices) from different group instances were combined.
class GroupMismatch : public Error {
public:
    using Error::Error;
};

class UnknownLabel : public Error {
public:
    using Error::Error;
};

class InvalidTarget : public Error {
public:
    using Error::Error;
};

/// A caller-supplied input violates a documented precondition.
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

/// No closed form is implemented for the requested parameter.
class Unsupported : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// A search or enumeration hit its configured budget.  Carries the last
/// level (radius, depth) that was fully completed, or -1 if none was.
class ResourceExceeded : public Error {
public:
    ResourceExceeded(const std::string& what, long last_completed)
        : Error(what), last_completed_(last_completed) {}

    long last_completed() const noexcept { return last_completed_; }

private:
    long last_completed_;
};

}  // namespace mgrowth

namespace mgrowth {

/// No positive real pole/root inside the searched interval.
class NoRootFound : public Error {
public:
    using Error::Error;
};

}  // namespace mgrowth
