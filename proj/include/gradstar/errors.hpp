#pragma once

#include <stdexcept>
#include <string>

namespace gradstar {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operands that do not live in the same structure (groups, matrix sizes, ...).
class StructuralError : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class UnsupportedInvolution : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// A computation would exceed the configured cell budget. Never a partial answer.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Two distinct elementary substitutions gave a nonzero value where at most one may.
class LemmaViolation : public Error {
public:
    using Error::Error;
};

} // namespace gradstar
