#pragma once

#include <stdexcept>
#include <string>

namespace feval {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

/// Raised when an aggregation window is not fully covered by monthly data.
class MissingMonthsError : public Error {
 public:
  using Error::Error;
};

class MissingQuartersError : public Error {
 public:
  using Error::Error;
};

class NonPositiveLaborError : public Error {
 public:
  using Error::Error;
};

/// CSV parse failure; carries 1-based row and column of the offending field.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& msg, int row, int col)
      : Error(msg + " (row " + std::to_string(row) + ", column " +
              std::to_string(col) + ")"),
        row_(row),
        col_(col) {}
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_;
  int col_;
};

class DuplicateCellError : public Error {
 public:
  using Error::Error;
};

class RankDeficientError : public Error {
 public:
  using Error::Error;
};

class TooFewObservationsError : public Error {
 public:
  using Error::Error;
};

class ConstantRegressorError : public Error {
 public:
  using Error::Error;
};

class RegimeTooSmallError : public Error {
 public:
  using Error::Error;
};

class SingularRestrictionError : public Error {
 public:
  using Error::Error;
};

class ZeroVarianceError : public Error {
 public:
  using Error::Error;
};

class MissingOriginInflationError : public Error {
 public:
  using Error::Error;
};

class NoTargetEpisodeError : public Error {
 public:
  using Error::Error;
};

class EmptyTestSetError : public Error {
 public:
  using Error::Error;
};

class EmptySubperiodError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace feval
