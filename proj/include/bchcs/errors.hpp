#ifndef BCHCS_ERRORS_HPP
#define BCHCS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bchcs {

// Exit-code categories used by the CLI: validation -> 1, io -> 2, internal -> 3.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotPrimitiveError : ValidationError {
    using ValidationError::ValidationError;
};
struct DivisionByZeroError : ValidationError {
    using ValidationError::ValidationError;
};
struct LengthTooLargeError : ValidationError {
    using ValidationError::ValidationError;
};
struct TooManyCodewordsError : ValidationError {
    using ValidationError::ValidationError;
};
struct TooLargeForFullGramError : ValidationError {
    using ValidationError::ValidationError;
};
struct NotPrimeError : ValidationError {
    using ValidationError::ValidationError;
};
struct DegreeTooLargeError : ValidationError {
    using ValidationError::ValidationError;
};
struct NotMersenneError : ValidationError {
    using ValidationError::ValidationError;
};
struct OrderTooLargeError : ValidationError {
    using ValidationError::ValidationError;
};
struct LengthMismatchError : ValidationError {
    using ValidationError::ValidationError;
};
struct DimensionMismatchError : ValidationError {
    using ValidationError::ValidationError;
};
struct BackendUnavailableError : ValidationError {
    using ValidationError::ValidationError;
};

// Malformed input file; carries the 1-based line number.
struct ParseError : IoError {
    ParseError(const std::string& what, std::size_t line)
        : IoError(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number;
};

}  // namespace bchcs

#endif
