#ifndef DILINT_ERRORS_HPP
#define DILINT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dilint {

// Violated mathematical precondition: division by zero, log of zero,
// dilog of 0 or 1, degree conditions, and the like.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally incompatible operands: mixed polynomial variables,
// elements of unrelated towers, size mismatches in data.
class StructuralError : public std::runtime_error {
public:
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// A required factorization step could not be completed.  `factor` holds the
// canonical text of the residual factor so the caller can supply roots and
// retry.
class UnsplittableError : public std::runtime_error {
public:
    UnsplittableError(const std::string& what, std::string factor_text)
        : std::runtime_error(what), factor(std::move(factor_text)) {}
    std::string factor;
};

struct SourcePos {
    int line = 1;
    int column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, SourcePos where)
        : std::runtime_error(what + " at " + std::to_string(where.line) + ":" +
                             std::to_string(where.column)),
          pos(where) {}
    SourcePos pos;
};

} // namespace dilint

#endif
