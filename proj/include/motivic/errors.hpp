#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motivic {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic domain violations: inverse of zero, evaluation at a pole,
// inversion of a singular matrix.
struct math_error : error {
    using error::error;
};

// Malformed textual input; `position` is a 0-based offset into the input.
struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& msg, std::size_t pos)
        : error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A consistency check that must hold by construction has failed; indicates
// a transcription or implementation bug, never a user error.
struct invariant_error : error {
    using error::error;
};

}  // namespace motivic
