#pragma once

#include <stdexcept>
#include <string>

namespace nilflat {

// Base class for everything this library throws on bad input.
// Internal logic errors still use assert/std::logic_error.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text (structure notation, involutions, planes, catalog files...).
// `pos` is a byte offset into the offending string when known, npos otherwise.
struct parse_error : error {
    static constexpr size_t npos = static_cast<size_t>(-1);
    size_t pos;
    parse_error(const std::string& msg, size_t at = npos) : error(msg), pos(at) {}
};

// Structurally well-formed input that violates a semantic precondition
// (Jacobi failure, non-nice basis, degenerate metric, ...).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

} // namespace nilflat
