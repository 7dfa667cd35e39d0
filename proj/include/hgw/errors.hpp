#pragma once

#include <stdexcept>
#include <string>

namespace hgw {

// Base of every error raised by the workbench.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  using Error::Error;
};

class NotConvolutionInvertible : public Error {
 public:
  using Error::Error;
};

class WellDefinednessViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedStrategy : public Error {
 public:
  using Error::Error;
};

// A structure failed validation where validity is a precondition.
class ValidationFailure : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hgw
