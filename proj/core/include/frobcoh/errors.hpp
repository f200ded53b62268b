#pragma once

#include <stdexcept>
#include <string>

namespace frobcoh {

struct InvalidTypeError : std::runtime_error {
    explicit InvalidTypeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DegreeOutOfRangeError : std::runtime_error {
    explicit DegreeOutOfRangeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PrimeGateError : std::runtime_error {
    explicit PrimeGateError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ScopeExceededError : std::runtime_error {
    explicit ScopeExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

/* Raised when two classifier case families fire with conflicting outputs.
   Under the admissible-prime gate this indicates a genuine bug. */
struct InternalInconsistencyError : std::logic_error {
    explicit InternalInconsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

struct FiltrationViolationError : std::runtime_error {
    explicit FiltrationViolationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotDominantError : std::runtime_error {
    explicit NotDominantError(const std::string& msg) : std::runtime_error(msg) {}
};

struct LengthError : std::runtime_error {
    explicit LengthError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace frobcoh
