#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympow {

// Base of everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text violating the ring/polynomial/scenario grammar. pos() is the
// byte offset into the offending string; what() already embeds it.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

// Precondition violations: ring mismatch, non-homogeneous input to a graded
// algorithm, invalid strategy/ideal combination, malformed map pairs.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A resource guard tripped (total-degree bound or soft time budget) and the
// computation was abandoned. Callers that can continue (rigidity scans, the
// CLI driver) catch this and record the diagnostic in place.
class GuardAbort : public Error {
public:
    explicit GuardAbort(const std::string& msg) : Error(msg) {}
};

} // namespace sympow
