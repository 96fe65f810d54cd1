#pragma once

#include <stdexcept>
#include <string>

namespace kdual {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class InsufficientTruncation : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class DegreeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CharacteristicError : public Error {
 public:
  using Error::Error;
};

}  // namespace kdual
