#pragma once

#include <stdexcept>
#include <string>

namespace cmkr {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// config_error -> exit 2, everything else derived from error -> exit 1.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A required file is missing or unreadable.
struct io_error : error {
    using error::error;
};

// A file exists but its structure does not match the documented format
// (payload length mismatch, unknown enum tag, malformed JSON/TSV).
struct format_error : error {
    using error::error;
};

// In-memory data violates a documented invariant (NaN feature, zero-norm row).
struct validation_error : error {
    using error::error;
};

// Invalid configuration or flag combination.
struct config_error : error {
    using error::error;
};

// Evaluation protocol violation (e.g. a query with no valid positive).
struct protocol_error : error {
    using error::error;
};

}  // namespace cmkr
