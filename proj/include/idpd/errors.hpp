#pragma once

#include <stdexcept>
#include <string>

namespace idpd {

// Base for everything thrown on purpose by the library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Values from different group decompositions, invalid PrimeIds, and other
// shape mismatches between otherwise well-formed objects.
struct structural_error : error {
    using error::error;
};

// A documented precondition of an operation was violated by the caller.
struct usage_error : error {
    using error::error;
};

// Malformed config / report documents. Messages cite the offending key.
struct config_error : error {
    using error::error;
};

// The operation is well-posed but outside what this tool can decide
// (infinite groups in enumerations, unsupported ring parameters, ...).
struct unsupported_error : error {
    using error::error;
};

} // namespace idpd
