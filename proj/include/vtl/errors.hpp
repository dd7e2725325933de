#ifndef VTL_ERRORS_HPP
#define VTL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vtl {

/// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / validation errors.
struct InvalidMatching : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct ParityViolation : Error { using Error::Error; };
struct MissingLabel : Error { using Error::Error; };
struct NotParityTangle : Error { using Error::Error; };
struct SyntaxError : Error { using Error::Error; };

// Operation preconditions.
struct SizeMismatch : Error { using Error::Error; };
struct KindMismatch : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct NoMatch : Error { using Error::Error; };
struct NotApplicable : Error { using Error::Error; };

// Guards against combinatorial blowup.
struct TooLarge : Error { using Error::Error; };
struct TooManyCrossings : Error { using Error::Error; };

/// Internal assertion failure: an h-sum came out odd. This can only be
/// caused by an implementation bug, never by valid input.
struct OddH : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace vtl

#endif
