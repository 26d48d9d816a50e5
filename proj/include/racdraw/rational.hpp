#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>

namespace racdraw {

// Arbitrary-precision integers and rationals. All geometric predicates in
// this library are exact; there is no floating point in the core.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Largest integer <= r. cpp_rational keeps the denominator positive.
inline BigInt floor_rat(const Rat& r) {
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt q = n / d;
    if (n < 0 && q * d != n) --q;
    return q;
}

inline BigInt ceil_rat(const Rat& r) {
    BigInt n = rat_num(r), d = rat_den(r);
    BigInt q = n / d;
    if (n > 0 && q * d != n) ++q;
    return q;
}

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline std::int64_t to_int64(const BigInt& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("BigInt out of int64 range");
    }
    return static_cast<std::int64_t>(v);
}

} // namespace racdraw
