#pragma once

#include <stdexcept>
#include <string>

namespace origami {

/// Malformed input: bad cycle notation, degree mismatch, non-transitive pair.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The origami is valid but its period lattice is a proper sublattice of Z^2.
class NotReducedError : public InputError {
 public:
  explicit NotReducedError(const std::string& what) : InputError(what) {}
};

/// A computation would exceed a configured size guard.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// An internal consistency check failed (non-integral index, no involution, ...).
class StructuralError : public std::logic_error {
 public:
  explicit StructuralError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace origami
