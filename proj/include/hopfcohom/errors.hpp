#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfcohom {

// Everything the engine throws derives from EngineError so the CLI can map
// failure classes onto exit codes (input = 2, budget = 3, the rest = 1).
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Scalars or matrices from different coefficient fields were combined.
class FieldMismatchError : public EngineError {
 public:
  using EngineError::EngineError;
};

// A matrix with rows*cols above the configured entry budget was requested.
class BudgetExceededError : public EngineError {
 public:
  BudgetExceededError(std::size_t rows, std::size_t cols, std::size_t limit)
      : EngineError("entry budget exceeded: " + std::to_string(rows) + "x" +
                    std::to_string(cols) + " > " + std::to_string(limit)),
        rows(rows),
        cols(cols),
        limit(limit) {}
  std::size_t rows, cols, limit;
};

// A module is missing a structure (action/coaction) an operation requires.
class StructureMissingError : public EngineError {
 public:
  using EngineError::EngineError;
};

// quotient_dim was asked for inner/outer spaces where inner is not contained
// in outer; upstream this signals a broken d^2 = 0 somewhere.
class ContainmentViolationError : public EngineError {
 public:
  using EngineError::EngineError;
};

class PreconditionError : public EngineError {
 public:
  using EngineError::EngineError;
};

// An operation's mathematical hypothesis does not hold for the input
// (e.g. Ext comparison over a bialgebra without an invertible antipode).
class UnsupportedHypothesisError : public EngineError {
 public:
  using EngineError::EngineError;
};

class DecompositionFailureError : public EngineError {
 public:
  using EngineError::EngineError;
};

// A restricted sub-bicomplex failed to be closed under a differential.
class ClosureViolationError : public EngineError {
 public:
  using EngineError::EngineError;
};

// Malformed or inconsistent input documents.
class InputError : public EngineError {
 public:
  using EngineError::EngineError;
};

namespace budget {

// Guard against materializing matrices whose row*col count explodes;
// tensor-power dimensions grow geometrically with the bidegree.
std::size_t entry_limit();
void set_entry_limit(std::size_t limit);

inline constexpr std::size_t kDefaultEntryLimit = 5'000'000;

// RAII helper for tests that need a temporary limit.
class ScopedLimit {
 public:
  explicit ScopedLimit(std::size_t limit) : saved_(entry_limit()) {
    set_entry_limit(limit);
  }
  ~ScopedLimit() { set_entry_limit(saved_); }
  ScopedLimit(const ScopedLimit&) = delete;
  ScopedLimit& operator=(const ScopedLimit&) = delete;

 private:
  std::size_t saved_;
};

}  // namespace budget

}  // namespace hopfcohom
