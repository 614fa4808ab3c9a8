#pragma once

#include <stdexcept>
#include <string>

namespace orbconf {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated by the caller.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Oracle matrix larger than the configured column budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Malformed serialized document or expression.
class ParseError : public Error {
public:
    using Error::Error;
};

// An exactness or consistency check inside the library failed. Never expected.
class InternalError : public Error {
public:
    using Error::Error;
};

// Raised by the operation that needs a coordinate description the model does not carry.
class Unsupported : public Error {
public:
    using Error::Error;
};

}  // namespace orbconf
