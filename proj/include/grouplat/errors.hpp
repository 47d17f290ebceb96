#pragma once

#include <stdexcept>
#include <string>

namespace grouplat {

/// Malformed group spec, selector, or lattice file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap (group order, subgroup count, coatom count, ...)
/// was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric failure: integer overflow, eigenvalue collision, tolerance breach.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A checked internal invariant did not hold.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] inline void fail_invariant(const std::string& msg) {
  throw InvariantViolation(msg);
}

// Always-on invariant check; these guard mathematical consistency and are
// kept in release builds.
#define GROUPLAT_CHECK(cond, msg)          \
  do {                                     \
    if (!(cond)) ::grouplat::fail_invariant(msg); \
  } while (0)

}  // namespace grouplat
