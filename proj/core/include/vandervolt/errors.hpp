#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace vandervolt {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

/// Structural singularity detected during LU elimination; carries the
/// 0-based column whose pivot candidates were all exactly zero.
class SingularMatrixError : public Error {
public:
  explicit SingularMatrixError(int column)
      : Error("singular matrix: no nonzero pivot in column " + std::to_string(column)),
        column_(column) {}

  int column() const { return column_; }

private:
  int column_;
};

class SingularSystemError : public Error {
public:
  using Error::Error;
};

class InvalidNodeSetError : public Error {
public:
  using Error::Error;
};

class InsufficientTrialBasisError : public Error {
public:
  using Error::Error;
};

class EnumerationTooLargeError : public Error {
public:
  using Error::Error;
};

/// MaxVol hit its swap cap without reaching a dominant submatrix; carries
/// the last row selection so callers can keep going with it.
class MaxVolConvergenceError : public Error {
public:
  MaxVolConvergenceError(std::string message, std::vector<int> last_rows)
      : Error(std::move(message)), last_rows_(std::move(last_rows)) {}

  const std::vector<int>& last_rows() const { return last_rows_; }

private:
  std::vector<int> last_rows_;
};

class EnlargedSystemSingularError : public Error {
public:
  using Error::Error;
};

class DegenerateHullError : public Error {
public:
  using Error::Error;
};

class UnsupportedDimensionError : public Error {
public:
  using Error::Error;
};

class InvalidLevelError : public Error {
public:
  using Error::Error;
};

/// Parse failure in a node file or basis spec; line is 1-based, 0 when the
/// error is not tied to a specific line.
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

}  // namespace vandervolt
