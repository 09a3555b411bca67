#pragma once

#include <stdexcept>
#include <string>

namespace coxfs {

/// Malformed user input: unknown type, bad parameter, unparsable file.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A group would exceed the configured order bound.
struct OrderBoundExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural check failed (relations, orthogonality, fusion axioms, ...).
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace coxfs
