#pragma once

#include <cstdint>
#include <string>

#include "lipsat/error.hpp"

namespace lipsat {

/// Exponents, generators and bounds are signed 64-bit throughout.  Inputs
/// whose derived quantities (products, table sizes) would leave this range
/// are rejected up front, so arithmetic on accepted values cannot wrap.
using Exponent = std::int64_t;

inline Exponent checked_add(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_add_overflow(a, b, &r))
        throw error(errc::overflow, "integer overflow in addition");
    return r;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
    Exponent r;
    if (__builtin_mul_overflow(a, b, &r))
        throw error(errc::overflow, "integer overflow in multiplication");
    return r;
}

} // namespace lipsat
