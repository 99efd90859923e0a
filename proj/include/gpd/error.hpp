#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpd {

// Base of every error raised by the library. Callers that only need to
// distinguish "bad input" from "too big" can catch ResourceLimitExceeded
// first and Error second.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class NonPositiveLowerParameter : public Error {
public:
    explicit NonPositiveLowerParameter(const std::string& value)
        : Error("lower parameter must be a positive rational, got " + value) {}
};

class ResourceLimitExceeded : public Error {
public:
    using Error::Error;
};

class InvalidGroupoid : public Error {
public:
    using Error::Error;
};

class OrderMismatch : public Error {
public:
    OrderMismatch(std::size_t lhs, std::size_t rhs)
        : Error("series orders differ: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

// Series-side precondition of compose: the inner series has a0 = 0.
class CompositionRequiresZeroConstant : public Error {
public:
    CompositionRequiresZeroConstant()
        : Error("inner series of a composition must have zero constant term") {}
};

// Species-side precondition of compose: the inner species is empty on the empty set.
class CompositionRequiresZeroFree : public Error {
public:
    CompositionRequiresZeroFree()
        : Error("inner species of a composition must take the empty groupoid at size 0") {}
};

class UnknownBuiltin : public Error {
public:
    explicit UnknownBuiltin(const std::string& name) : Error("unknown builtin species '" + name + "'") {}
};

}  // namespace gpd
