#pragma once

#include <stdexcept>
#include <string>

namespace probing {

// An enumeration-style operation was asked to expand more outcomes or sets
// than its documented size cap allows.
class EnumerationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The adaptive DP exceeded its memo-table budget.
class StateBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A strategy tree violates a structural invariant (repeated element on a
// root-leaf path, infeasible probe, dangling node index).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A JSON document does not match the instance/report/tree schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace probing
