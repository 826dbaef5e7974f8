#pragma once

#include <stdexcept>

namespace polarq {

// Bad run configuration (exit category distinct from parameter misuse inside
// the library, which throws std::invalid_argument).
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem-level failures.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent table files; the message carries the location.
struct table_format_error : io_error {
    using io_error::io_error;
};

}  // namespace polarq
