#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace itree {

/// Input violates an operation's stated precondition (bad parameters,
/// disconnected graph, forbidden clique present, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed edge-list / JSON input. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// An exact search was asked to run past its configured limits.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A guarantee that a proven statement says can't fail, failed. Carries a
/// human-readable dump of the offending state.
class InternalError : public std::logic_error {
 public:
  InternalError(const std::string& what, std::string dump = {})
      : std::logic_error(what), dump_(std::move(dump)) {}
  const std::string& dump() const { return dump_; }

 private:
  std::string dump_;
};

/// A precondition failure with a vertex-set witness: a triangle, an r-clique
/// or a component that proves the input is outside the operation's domain.
class WitnessError : public PreconditionError {
 public:
  WitnessError(const std::string& what, std::vector<int> witness)
      : PreconditionError(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

}  // namespace itree
