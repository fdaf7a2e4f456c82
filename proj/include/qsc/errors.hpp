#pragma once

#include <stdexcept>
#include <string>

namespace qsc {

// Invalid configuration: unknown Dynkin type, impossible rank, bad preset.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// API misuse: mismatched root systems, element outside the required coset, ...
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configurable cap (group size, product degree) was exceeded.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant that is mathematically guaranteed failed to hold.
// Reaching this always indicates a bug, never bad user input.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace qsc
