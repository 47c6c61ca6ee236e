#pragma once

#include <stdexcept>
#include <string>

namespace scs {

// Base class for all library-specific failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed external input (JSON, DIMACS, token streams).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// An API precondition was violated by the caller.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(what) {}
};

// An operation would exceed an explicit size/expansion budget.
class SizeGuardError : public Error {
 public:
  explicit SizeGuardError(const std::string& what) : Error(what) {}
};

// A solution string does not decode back to a source-problem witness.
class ExtractionError : public Error {
 public:
  explicit ExtractionError(const std::string& what) : Error(what) {}
};

// A heuristic could not produce a feasible output within its limits.
class HeuristicError : public Error {
 public:
  explicit HeuristicError(const std::string& what) : Error(what) {}
};

}  // namespace scs
