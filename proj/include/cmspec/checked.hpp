#pragma once

#include <stdexcept>

namespace cmspec {

// Every spectral quantity in this library is an exact integer, so a silent
// wraparound would corrupt results without any visible symptom.  All
// arithmetic on potentially large values goes through these helpers, which
// raise std::overflow_error instead of wrapping.

inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline long long checked_sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

}  // namespace cmspec
