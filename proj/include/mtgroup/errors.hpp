#pragma once

#include <stdexcept>
#include <string>

namespace mtg {

/// Malformed or out-of-contract input (bad rank, dimension mismatch,
/// cocharacter outside the lattice, inconsistent Galois action, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised by every operation that needs a compact maximal torus when the
/// real form is not inner (the Vogan diagram carries a nontrivial automorphism).
class NoCompactMaximalTorus : public std::domain_error {
 public:
  NoCompactMaximalTorus() : std::domain_error("no compact maximal torus") {}
  explicit NoCompactMaximalTorus(const std::string& context)
      : std::domain_error("no compact maximal torus: " + context) {}
};

}  // namespace mtg
