#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lieinv {

// Base for every error raised by the library. The CLI maps subclasses onto
// exit codes, so each distinct failure mode gets its own type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero expression") {}
};

class SubstitutionPole : public Error {
 public:
  using Error::Error;
};

class InvalidRational : public Error {
 public:
  explicit InvalidRational(const std::string& text) : Error("invalid rational '" + text + "'") {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class JacobiViolation : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  using Error::Error;
};

class UnsupportedSpectrum : public Error {
 public:
  using Error::Error;
};

class NotPolynomial : public Error {
 public:
  using Error::Error;
};

class NotParameterFree : public Error {
 public:
  using Error::Error;
};

class InvalidGamma : public Error {
 public:
  using Error::Error;
};

// Malformed input files (JSON schema violations and similar).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace lieinv
