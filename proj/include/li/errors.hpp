#pragma once

#include <stdexcept>
#include <string>

namespace li {

// Base class for all library errors. Subclasses map onto the CLI's
// exit-code convention: any li::Error is a domain failure (exit 1),
// while malformed input caught at the parsing layer is usage (exit 2).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands belong to lattices of different shape, or vector lengths disagree.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// A value lies outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Conditioning on the bottom element or a zero-valued context.
class UndefinedContextError : public Error {
 public:
  explicit UndefinedContextError(const std::string& msg) : Error(msg) {}
};

// Bayes update with zero evidence for the observed datum.
class ImpossibleDatumError : public Error {
 public:
  explicit ImpossibleDatumError(const std::string& msg) : Error(msg) {}
};

// Information of p relative to q where q vanishes on the support of p.
class InfiniteInformationError : public Error {
 public:
  explicit InfiniteInformationError(const std::string& msg) : Error(msg) {}
};

// Iterative solver failed to meet its tolerance.
class NoConvergenceError : public Error {
 public:
  explicit NoConvergenceError(const std::string& msg) : Error(msg) {}
};

// Overflow or other non-finite intermediate.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

// Entropy grouping with an empty subsidiary block.
class DegenerateSplitError : public Error {
 public:
  explicit DegenerateSplitError(const std::string& msg) : Error(msg) {}
};

// Interval narrowing found no bracket on one side within the search bounds.
class UnboundedSideError : public Error {
 public:
  explicit UnboundedSideError(const std::string& msg) : Error(msg) {}
};

}  // namespace li
