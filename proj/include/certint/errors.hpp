#pragma once

#include <stdexcept>
#include <string>

namespace certint {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class OutOfDomainError : public Error {
public:
    explicit OutOfDomainError(const std::string& what) : Error("out of domain: " + what) {}
};

class UnsupportedPointKindError : public Error {
public:
    explicit UnsupportedPointKindError(const std::string& what)
        : Error("unsupported point kind: " + what) {}
};

class EmptyIntersectionError : public Error {
public:
    explicit EmptyIntersectionError(const std::string& what)
        : Error("empty intersection: " + what) {}
};

class NoWitnessError : public Error {
public:
    explicit NoWitnessError(const std::string& what) : Error("no witness: " + what) {}
};

class NotIntegrableError : public Error {
public:
    explicit NotIntegrableError(const std::string& what) : Error("not integrable: " + what) {}
};

class NotContinuousModelError : public Error {
public:
    explicit NotContinuousModelError(const std::string& what)
        : Error("model not certified continuous: " + what) {}
};

class RangeNotExactError : public Error {
public:
    explicit RangeNotExactError(const std::string& what) : Error("range not exact: " + what) {}
};

class InadmissibleSpecError : public Error {
public:
    explicit InadmissibleSpecError(const std::string& what)
        : Error("inadmissible removal rule: " + what) {}
};

class NoContinuityCertificateError : public Error {
public:
    explicit NoContinuityCertificateError(const std::string& what)
        : Error("no continuity certificate: " + what) {}
};

class NonExactEvaluationError : public Error {
public:
    explicit NonExactEvaluationError(const std::string& what)
        : Error("non-exact evaluation: " + what) {}
};

class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& what) : Error("budget exceeded: " + what) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error("precondition violated: " + what) {}
};

} // namespace certint
