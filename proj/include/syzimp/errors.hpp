#pragma once

#include <stdexcept>
#include <string>

namespace syzimp {

// Malformed textual input (polynomials, rationals, CLI values).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// The caller handed us data that violates a documented requirement
// (wrong arity, degree mismatch, common factor, not a syzygy, ...).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// The input satisfied the preconditions but a genericity / rank /
// degeneracy hypothesis failed at run time (singular resultant matrix,
// unexpected kernel dimension, identically zero determinant, ...).
// These are reported, never silently swallowed.
class HypothesisError : public std::runtime_error {
public:
  explicit HypothesisError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal consistency check failed; indicates a bug in this library.
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline void internal_check(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace syzimp
