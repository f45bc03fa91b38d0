#pragma once

#include <stdexcept>
#include <string>

namespace kg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
};

struct PoleAtOrigin : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line, const std::string& token, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what + " '" + token + "'"),
        line(line),
        token(token) {}
  int line;
  std::string token;
};

struct InvalidDiagram : Error {
  using Error::Error;
};

struct PatternMismatch : Error {
  using Error::Error;
};

}  // namespace kg
