#pragma once

#include <stdexcept>
#include <string>

namespace xtal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size cap (vertices, chains, search states) was hit.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// A structural property that must hold for a genuine crystal failed.
/// Seeing one of these means the input graph is corrupt (or the theory is wrong).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace xtal
