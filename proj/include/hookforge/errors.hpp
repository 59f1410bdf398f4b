#ifndef HOOKFORGE_ERRORS_HPP
#define HOOKFORGE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hookforge {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text or JSON.
struct ParseError : Error {
    using Error::Error;
};

// Structurally parsable input that violates a type invariant
// (non-monotone partition, cube set that is not a lower ideal, ...).
struct InvalidObjectError : Error {
    using Error::Error;
};

// An operation was called outside its stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// A configured size limit was exceeded.
struct LimitError : Error {
    using Error::Error;
};

} // namespace hookforge

#endif
