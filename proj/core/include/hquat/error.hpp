#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hquat {

// Bad input: precondition violated, malformed text, out-of-range query.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A result the mathematics says cannot happen. Always a bug.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A 64-bit coordinate or norm left the representable range.
class Overflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("int64 overflow in addition");
    return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow("int64 overflow in subtraction");
    return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("int64 overflow in multiplication");
    return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

}  // namespace checked

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InvalidArgument(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw InvariantViolation(what);
}

}  // namespace hquat
