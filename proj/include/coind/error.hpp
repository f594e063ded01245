#pragma once

#include <stdexcept>
#include <string>

namespace coind {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// raised by compose() when degrees do not line up
class CompositionError : public Error {
public:
    using Error::Error;
};

class TruncationError : public Error {
public:
    using Error::Error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class InvalidDeletion : public Error {
public:
    using Error::Error;
};

class DegenerateStack : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// an internal identity that must hold failed; never expected to fire
class ConsistencyFailure : public Error {
public:
    using Error::Error;
};

class NotACharacter : public Error {
public:
    using Error::Error;
};

}  // namespace coind
