#pragma once

#include <stdexcept>
#include <string>

namespace anticomm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit the operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Argument outside the documented domain (zero polynomial, bad triple, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The characteristic polynomial does not split over the rationals.
class IrrationalSpectrum : public Error {
public:
    using Error::Error;
};

class NotAntiCommuting : public Error {
public:
    NotAntiCommuting() : Error("AB + BA != 0") {}
};

class NotInCommutant : public Error {
public:
    using Error::Error;
};

class NotGeneric : public Error {
public:
    using Error::Error;
};

class RetriesExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace anticomm
