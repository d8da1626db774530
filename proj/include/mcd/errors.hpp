#pragma once

#include <stdexcept>
#include <string>

namespace mcd {

// Malformed external input (graph6 text, colouring files, reports).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A desk-scale cap was hit (vertex cap, clique-list cap). Explicit failure,
// never a silent fallback to a heuristic answer.
class CapError : public std::runtime_error {
public:
    explicit CapError(const std::string& msg) : std::runtime_error(msg) {}
};

// An enumeration budget was exceeded (colouring counts, search nodes).
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mcd
