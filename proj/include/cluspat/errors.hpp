#ifndef CLUSPAT_ERRORS_HPP
#define CLUSPAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cluspat {

// Base for every error raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input: bad dimensions, bad indices, unparsable text.
struct InvalidArgument : Error {
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

struct IndexOutOfRange : InvalidArgument {
  explicit IndexOutOfRange(const std::string& msg) : InvalidArgument(msg) {}
};

struct DimensionMismatch : InvalidArgument {
  explicit DimensionMismatch(const std::string& msg) : InvalidArgument(msg) {}
};

// No positive diagonal D makes D*M skew-symmetric.
struct NotSkewSymmetrizable : Error {
  explicit NotSkewSymmetrizable(const std::string& msg) : Error(msg) {}
};

// Exact polynomial division left a remainder.  In pattern walks this is an
// internal-consistency failure, never a data condition.
struct NotDivisible : Error {
  explicit NotDivisible(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
  explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// A polynomial exceeded the configured term-count ceiling.
struct TermLimitExceeded : Error {
  explicit TermLimitExceeded(const std::string& msg) : Error(msg) {}
};

// A column of C (or row of G) was expected to be sign-coherent and is not.
struct SignIncoherent : Error {
  explicit SignIncoherent(const std::string& msg) : Error(msg) {}
};

// The two H-matrix routes disagree.
struct HMismatch : Error {
  explicit HMismatch(const std::string& msg) : Error(msg) {}
};

// An initial-seed F-polynomial transform failed to cancel its denominator.
struct CancellationFailure : Error {
  explicit CancellationFailure(const std::string& msg) : Error(msg) {}
};

// A cluster variable failed to clear its x-denominator.
struct NonLaurent : Error {
  explicit NonLaurent(const std::string& msg) : Error(msg) {}
};

// D^{-1} C^T D produced a non-integer entry in the principal extension.
struct NonIntegerBlock : Error {
  explicit NonIntegerBlock(const std::string& msg) : Error(msg) {}
};

}  // namespace cluspat

#endif
