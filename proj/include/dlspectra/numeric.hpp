#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dlspectra {

// Arbitrary-precision scalars. Characteristic polynomials of distance
// Laplacians blow past 64 bits well before n = 20, so everything exact
// runs on these.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Int& v) { return v.sign(); }
inline int sign_of(const Rat& v) { return v.sign(); }

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Floor of the integer square root; v must be nonnegative.
inline Int isqrt_floor(const Int& v) {
    return boost::multiprecision::sqrt(v);
}

inline bool is_perfect_square(const Int& v, Int* root = nullptr) {
    if (v < 0) return false;
    Int r = isqrt_floor(v);
    if (r * r == v) {
        if (root) *root = r;
        return true;
    }
    return false;
}

}  // namespace dlspectra
