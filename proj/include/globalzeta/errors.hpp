#pragma once

#include <stdexcept>
#include <string>

namespace gz {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument lies within the pole-exclusion radius of a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// L-polynomial coefficients break a_{2g-i} = q^{g-i} a_i.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// Malformed field spec or command-line value; the message names the token.
class ParseError : public Error {
 public:
  ParseError(const std::string& token, const std::string& why)
      : Error("cannot parse '" + token + "': " + why), token_(token) {}

  const std::string& token() const noexcept { return token_; }

 private:
  std::string token_;
};

}  // namespace gz
