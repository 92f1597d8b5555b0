#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pext {

/// Exact nonnegative count (partition counts, family sizes).
using BigCount = mpz_class;

/// Exact rational, always kept in canonical (reduced, positive denominator) form.
using ExactRatio = mpq_class;

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated.
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// The request exceeds a table or enumeration capacity.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A ratio was requested whose denominator vanishes.
class DegenerateInputError : public Error {
public:
  using Error::Error;
};

/// phi(l) is undefined because gamma(l) == 2.
class PoleError : public Error {
public:
  using Error::Error;
};

/// No nontrivially t-intersecting candidate family exists for (n, t).
class EmptyRegimeError : public Error {
public:
  using Error::Error;
};

inline std::string to_decimal(const BigCount& value) { return value.get_str(10); }
inline std::string to_decimal(const ExactRatio& value) { return value.get_str(10); }

} // namespace pext
