#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace braidgrow {

// Any wrapped integer result is a hard bug, so all counting and coordinate
// arithmetic goes through the checked helpers below.
struct OverflowError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StoreError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MemCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("signed 64-bit addition overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("signed 64-bit subtraction overflow");
    return r;
}

inline std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("unsigned 64-bit addition overflow");
    return r;
}

inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("unsigned 64-bit multiplication overflow");
    return r;
}

} // namespace braidgrow
