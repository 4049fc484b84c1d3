#pragma once

#include <stdexcept>
#include <string>

namespace skewsym {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidShape : public Error {
 public:
  using Error::Error;
};

class InvalidBound : public Error {
 public:
  using Error::Error;
};

class InvalidArg : public Error {
 public:
  using Error::Error;
};

class IncomparableTruncation : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `token()` is the offending piece of the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string token);
  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace skewsym
