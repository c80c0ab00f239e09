#pragma once

#include <stdexcept>
#include <string>

namespace ruled {

// Raised when an operation is mathematically undefined for the given input
// (degenerate surface, wrong kernel dimension, non-symmetric biform, ...).
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the document layer for malformed or inconsistent input.
struct document_error : std::runtime_error {
    explicit document_error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const char* what) {
    if (!cond) throw math_error(what);
}

}  // namespace ruled
