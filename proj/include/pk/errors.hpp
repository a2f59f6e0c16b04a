#pragma once

#include <stdexcept>
#include <string>

namespace pk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised when a sign could not be certified at the maximum working precision.
class SignUndecidable : public Error {
public:
    using Error::Error;
};

class NonSymmetric : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class UnsupportedCableShape : public Error {
public:
    using Error::Error;
};

class NonUnitImage : public Error {
public:
    using Error::Error;
};

class ZeroImage : public Error {
public:
    using Error::Error;
};

class CaseMismatch : public Error {
public:
    using Error::Error;
};

class IncompatiblePresentation : public Error {
public:
    using Error::Error;
};

class InvalidCharacter : public Error {
public:
    using Error::Error;
};

class InvalidKnot : public Error {
public:
    using Error::Error;
};

// Two independent computations of the same quantity disagreed.
class RouteDisagreement : public Error {
public:
    using Error::Error;
};

}  // namespace pk
