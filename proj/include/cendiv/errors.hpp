#pragma once

#include <stdexcept>
#include <string>

namespace cendiv {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input (polynomial strings, cycle types, matrix files).
struct parse_error : error {
    parse_error(const std::string& what, std::size_t line, std::size_t column)
        : error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line), column(column) {}
    explicit parse_error(const std::string& what) : error(what), line(0), column(0) {}
    std::size_t line;
    std::size_t column;
};

// Operands declared over different fields.
struct field_mismatch_error : error {
    using error::error;
};

// A desk-scale guard was exceeded (oracle sizes, rational residue_iso degree).
struct capacity_error : error {
    using error::error;
};

// Caller violated a documented precondition.
struct precondition_error : error {
    using error::error;
};

// Internal consistency failure; signals an arithmetic bug, never a legal input.
struct internal_error : error {
    using error::error;
};

} // namespace cendiv
