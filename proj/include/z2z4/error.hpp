#pragma once

#include <stdexcept>
#include <string>

namespace z2z4 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Enumeration or pair-scan budget would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Completion found a contradiction: no extended 1-perfect superset exists.
class Infeasible : public Error {
 public:
  using Error::Error;
};

/// Completion exhausted its propagation and backtracking budget.
class Stalled : public Error {
 public:
  using Error::Error;
};

}  // namespace z2z4
