#pragma once

#include <stdexcept>
#include <string>

namespace boxrep {

/// Malformed input or violated precondition on user-supplied data.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured size guard refused the instance.
class SizeGuardError : public std::runtime_error {
public:
    SizeGuardError(const std::string& what_guard, long long value, long long limit)
        : std::runtime_error(what_guard + " = " + std::to_string(value) + " exceeds limit " +
                             std::to_string(limit)),
          guard_(what_guard), value_(value), limit_(limit) {}

    const std::string& guard() const noexcept { return guard_; }
    long long value() const noexcept { return value_; }
    long long limit() const noexcept { return limit_; }

private:
    std::string guard_;
    long long value_;
    long long limit_;
};

/// An internal invariant failed: a construction did not verify. Always a bug.
class DefectError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace boxrep
