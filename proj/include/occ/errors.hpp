#pragma once

#include <stdexcept>
#include <string>

namespace occ {

// Bad caller data: malformed matrices, tuples failing validation, out-of-domain
// arguments.  Maps to exit code 2 in the CLI.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource bound was hit (enumeration size, solver state cap,
// precision cap).  The input may be fine; the limits are not.  Exit code 2.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check failed.  Always a bug, never the input's fault.
// Exit code 3.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace occ
