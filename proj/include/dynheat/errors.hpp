#ifndef DYNHEAT_ERRORS_HPP
#define DYNHEAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dynheat {

// Common base so callers can catch all library failures at once.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---- spectral ----

// No sign change of the characteristic residual inside the expected interval.
class BracketFailure : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class ExcludedIndexError : public Error {
public:
    using Error::Error;
};

// ---- expansion / sampling ----

class GridMismatch : public Error {
public:
    using Error::Error;
};

class NonMonotoneGrid : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

// ---- solvers ----

class GridTooCoarse : public Error {
public:
    using Error::Error;
};

class HypothesisViolation : public Error {
public:
    using Error::Error;
};

class SingularSystem : public Error {
public:
    using Error::Error;
};

// ---- inverse ----

// Carries the tag ("A1", "A2", "A3") of the first violated assumption.
class AssumptionViolation : public Error {
public:
    AssumptionViolation(std::string tag, const std::string& what)
        : Error(what), tag_(std::move(tag)) {}
    const std::string& tag() const { return tag_; }

private:
    std::string tag_;
};

class NonpositiveE : public Error {
public:
    using Error::Error;
};

class NonpositiveQ : public Error {
public:
    using Error::Error;
};

class NoConvergence : public Error {
public:
    using Error::Error;
};

class ClosureFailure : public Error {
public:
    using Error::Error;
};

// ---- io ----

class FormatError : public Error {
public:
    FormatError(long line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Carries a JSON pointer to the offending field.
class SchemaError : public Error {
public:
    SchemaError(std::string pointer, const std::string& what)
        : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

} // namespace dynheat

#endif // DYNHEAT_ERRORS_HPP
