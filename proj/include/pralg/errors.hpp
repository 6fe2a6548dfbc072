#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pralg {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A node's typing side condition failed (term construction, replace, ...).
struct ArityMismatch : Error {
  using Error::Error;
};

// Projection index out of range (pi or mpi entries).
struct BadIndex : Error {
  using Error::Error;
};

// A position stepped into a leaf or past the end of a term.
struct InvalidPosition : Error {
  using Error::Error;
};

// DSL parse failure; message carries line:column.
struct SyntaxError : Error {
  SyntaxError(int line, int col, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line(line), col(col) {}
  int line, col;
};

// JSON term/proof did not match the schema; message carries the path.
struct SchemaError : Error {
  using Error::Error;
};

// The evaluator ran out of step budget.
struct FuelExhausted : Error {
  using Error::Error;
};

// A proof step did not apply during replay.
struct StepMismatch : Error {
  StepMismatch(std::size_t index, const std::string& what)
      : Error("step " + std::to_string(index) + ": " + what), index(index) {}
  std::size_t index;
};

}  // namespace pralg
