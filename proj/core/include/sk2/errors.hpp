#pragma once

#include <stdexcept>
#include <string>

namespace sk2 {

// Requested value lies outside the completeness region of a stored expansion
// (or a series/table is too short). Carries the region actually required.
class PrecisionError : public std::runtime_error {
public:
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

// A verification suite found a genuine mismatch (not a usage error).
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

// Internal consistency check failed (bug territory, not user input).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Cache file failed its integrity or header validation.
class CacheError : public std::runtime_error {
public:
    explicit CacheError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sk2
