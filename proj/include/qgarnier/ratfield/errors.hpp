#pragma once

#include <stdexcept>
#include <string>

namespace qgarnier {

class DivisionByZero : public std::domain_error {
 public:
  explicit DivisionByZero(const std::string& what = "division by zero")
      : std::domain_error(what) {}
};

class PoleAtPoint : public std::domain_error {
 public:
  explicit PoleAtPoint(const std::string& what = "denominator vanishes at evaluation point")
      : std::domain_error(what) {}
};

class InconclusiveAllPoles : public std::runtime_error {
 public:
  explicit InconclusiveAllPoles(const std::string& what = "every sampled point was a pole")
      : std::runtime_error(what) {}
};

class ParseError : public std::invalid_argument {
 public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qgarnier
