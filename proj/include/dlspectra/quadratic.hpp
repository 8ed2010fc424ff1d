#pragma once

#include <cmath>
#include <stdexcept>

#include "dlspectra/numeric.hpp"

namespace dlspectra {

// Exact value of the form a + b*sqrt(d) with rational a, b and integer d >= 0.
// Perfect-square d collapses to the rational case at construction, so b != 0
// implies d is a genuine irrational radical.
struct QuadValue {
    Rat a;
    Rat b;
    Int d = 0;

    QuadValue() = default;
    QuadValue(Rat a_, Rat b_, Int d_) : a(std::move(a_)), b(std::move(b_)), d(std::move(d_)) {
        if (d < 0) throw std::invalid_argument("QuadValue: negative radicand");
        Int root;
        if (b == 0) {
            d = 0;
        } else if (is_perfect_square(d, &root)) {
            a += b * Rat(root);
            b = 0;
            d = 0;
        }
    }

    static QuadValue rational(Rat r) { return QuadValue(std::move(r), Rat(0), Int(0)); }

    bool is_rational() const { return b == 0; }

    double to_double() const {
        return static_cast<double>(a) +
               static_cast<double>(b) * std::sqrt(static_cast<double>(d));
    }

    // Exact sign of (a + b*sqrt(d)) - q, decided by rational arithmetic only.
    int compare(const Rat& q) const {
        Rat t = a - q;
        if (b == 0) return sign_of(t);
        if (b > 0) {
            if (t >= 0) return 1;
            // t < 0: compare b^2 d vs t^2
            Rat lhs = b * b * Rat(d), rhs = t * t;
            return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
        }
        if (t <= 0) return -1;
        Rat lhs = t * t, rhs = b * b * Rat(d);
        return lhs > rhs ? 1 : (lhs == rhs ? 0 : -1);
    }

    bool operator<(const QuadValue& o) const { return to_double() < o.to_double(); }
};

}  // namespace dlspectra
