#pragma once

#include <stdexcept>
#include <string>

namespace iwasawa {

/// Malformed input (bad JSON, wrong shapes, unparsable rationals). CLI exit 2.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Base for mathematical/domain failures. CLI exit 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

class PreconditionError : public DomainError {
 public:
  explicit PreconditionError(const std::string& what) : DomainError("precondition", what) {}
};

class UnsupportedInputError : public DomainError {
 public:
  explicit UnsupportedInputError(const std::string& what) : DomainError("unsupported", what) {}
};

class InconsistencyError : public DomainError {
 public:
  explicit InconsistencyError(const std::string& what) : DomainError("inconsistency", what) {}
};

class ConvergenceError : public DomainError {
 public:
  explicit ConvergenceError(const std::string& what) : DomainError("convergence", what) {}
};

/// Wraps a failure with the name of the pipeline stage that produced it.
class StageError : public DomainError {
 public:
  StageError(std::string stage, const std::string& what)
      : DomainError("stage", stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace iwasawa
