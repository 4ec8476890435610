#pragma once

#include <stdexcept>

namespace qcount {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A division expected to be exact left a remainder.
/// Seeing this means a formula is implemented wrongly.
class DivisionInexact : public Error {
public:
    using Error::Error;
};

/// A result that must be a cardinality came out negative.
class InvariantBreach : public Error {
public:
    using Error::Error;
};

class NotPrime : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DegreeTooLarge : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class NotIrreducible : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DimensionMismatch : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class KOutOfRange : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class RngExhausted : public Error {
public:
    using Error::Error;
};

/// Exhaustive enumeration was requested beyond the size guard.
class TooLarge : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

class ParseError : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

} // namespace qcount
