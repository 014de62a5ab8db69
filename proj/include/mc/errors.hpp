#ifndef MC_ERRORS_HPP
#define MC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mc {

// Base class for all reasoning-level errors thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Concrete grammar violation.  `position` is a byte offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
};

// A concept or role name not declared in the ambient signature.
struct UndeclaredNameError : Error {
    std::string name;
    explicit UndeclaredNameError(const std::string& n)
        : Error("undeclared name: " + n), name(n) {}
};

// An operation received a concept outside the dialect it supports.
struct DialectError : Error {
    explicit DialectError(const std::string& msg) : Error(msg) {}
};

// An operation that requires a satisfiable concept received an unsatisfiable one.
struct UnsatisfiableConceptError : Error {
    explicit UnsatisfiableConceptError(const std::string& msg) : Error(msg) {}
};

// An operation that requires a tree-shaped pointed interpretation received
// something else.
struct NotTreeShapedError : Error {
    explicit NotTreeShapedError(const std::string& msg) : Error(msg) {}
};

// Malformed input file (signature / interpretation / change request JSON).
struct InputError : Error {
    explicit InputError(const std::string& msg) : Error(msg) {}
};

// The oracle's class-count preflight rejected an enumeration request.
struct BudgetError : Error {
    // Log2 of the class count that was computed before giving up.
    double log2_count;
    BudgetError(double lg, const std::string& msg) : Error(msg), log2_count(lg) {}
};

// A change request whose positive and negative sides cannot be separated
// (e.g. bisimilar cross-pairs), or an empty revision candidate set.
struct RealizabilityError : Error {
    explicit RealizabilityError(const std::string& msg) : Error(msg) {}
};

}  // namespace mc

#endif
