#pragma once

#include <stdexcept>
#include <string>

namespace hfl {

/// Base class for all domain errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A hesitant fuzzy element must be a nonempty subset of [0,1].
class EmptyHfeError : public Error {
 public:
  explicit EmptyHfeError(const std::string& what = "hesitant fuzzy element must be nonempty")
      : Error(what) {}
};

/// A membership grade fell outside [0,1], or an interval piece was degenerate.
class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(what) {}
};

/// Tuple lengths incompatible with the requested componentwise operation.
class ArityError : public Error {
 public:
  explicit ArityError(const std::string& what) : Error(what) {}
};

/// Input does not satisfy the precondition of the non-lattice witness step.
class WitnessError : public Error {
 public:
  explicit WitnessError(const std::string& what) : Error(what) {}
};

/// Exhaustive enumeration was requested over a universe too large to sweep.
class OracleBudgetError : public Error {
 public:
  explicit OracleBudgetError(const std::string& what) : Error(what) {}
};

/// A sampled instance violates the sample-level precondition of a checker.
class SampleError : public Error {
 public:
  explicit SampleError(const std::string& what) : Error(what) {}
};

/// Malformed or incomplete evaluation configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Malformed input document (JSON or literal syntax).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Exact integer arithmetic exceeded the 64-bit representation.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

/// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(what) {}
};

}  // namespace hfl
