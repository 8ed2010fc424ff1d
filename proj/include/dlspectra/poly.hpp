#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlspectra/numeric.hpp"

namespace dlspectra {

// Dense integer polynomial, coefficients ascending (c[i] is the x^i term).
// The zero polynomial is the empty vector; otherwise the top coefficient is
// nonzero.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    static IntPoly constant(Int v) {
        IntPoly p;
        if (v != 0) p.c.push_back(std::move(v));
        return p;
    }

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const Int& lc() const { return c.back(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

inline IntPoly derivative(const IntPoly& p) {
    IntPoly d;
    if (p.degree() < 1) return d;
    d.c.resize(p.c.size() - 1);
    for (std::size_t i = 1; i < p.c.size(); ++i) d.c[i - 1] = p.c[i] * static_cast<int>(i);
    d.trim();
    return d;
}

inline Int content(const IntPoly& p) {
    Int g = 0;
    for (const Int& v : p.c) {
        g = boost::multiprecision::gcd(g, v);
        if (g == 1) break;
    }
    return g;  // nonnegative; 0 only for the zero polynomial
}

// Divide out the content; the sign of the leading coefficient is preserved.
inline IntPoly primitive_part(const IntPoly& p) {
    Int g = content(p);
    if (g == 0 || g == 1) return p;
    IntPoly q = p;
    for (Int& v : q.c) v /= g;
    return q;
}

inline IntPoly negate(const IntPoly& p) {
    IntPoly q = p;
    for (Int& v : q.c) v = -v;
    return q;
}

// Pseudo-remainder: returns R with lc(b)^(deg a - deg b + 1) * a = q*b + R.
inline IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_rem by zero polynomial");
    IntPoly r = a;
    const Int& d = b.lc();
    int steps = a.degree() - b.degree() + 1;
    if (steps <= 0) {
        // degree(a) < degree(b): remainder is d^steps * a, but steps would be
        // nonpositive; callers only hit this with steps == 1 semantics.
        return a;
    }
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        Int top = r.lc();
        for (Int& v : r.c) v *= d;
        for (int i = 0; i <= b.degree(); ++i)
            r.c[static_cast<std::size_t>(i + shift)] -= top * b.c[static_cast<std::size_t>(i)];
        r.trim();
        --steps;
    }
    // Pad with remaining powers of d so the multiplier is exactly d^(delta+1);
    // keeps the sign bookkeeping in sturm chains uniform.
    while (steps-- > 0)
        for (Int& v : r.c) v *= d;
    return r;
}

// Exact division: a must be a polynomial multiple of b.
inline IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("exact_div by zero polynomial");
    if (a.is_zero()) return IntPoly{};
    IntPoly r = a;
    std::vector<Int> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        Int coef = r.lc() / b.lc();
        if (coef * b.lc() != r.lc())
            throw std::invalid_argument("exact_div: division is not exact");
        q[static_cast<std::size_t>(shift)] = coef;
        for (int i = 0; i <= b.degree(); ++i)
            r.c[static_cast<std::size_t>(i + shift)] -= coef * b.c[static_cast<std::size_t>(i)];
        r.trim();
    }
    if (!r.is_zero()) throw std::invalid_argument("exact_div: nonzero remainder");
    return IntPoly{std::move(q)};
}

inline IntPoly multiply(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly{};
    std::vector<Int> out(a.c.size() + b.c.size() - 1);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    return IntPoly{std::move(out)};
}

inline IntPoly subtract(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> out(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] -= b.c[i];
    return IntPoly{std::move(out)};
}

// Primitive polynomial gcd (positive leading coefficient), primitive PRS with
// content stripped after every pseudo-remainder to keep coefficients small.
inline IntPoly poly_gcd(IntPoly a, IntPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.is_zero()) std::swap(a, b);
    while (!b.is_zero()) {
        if (a.degree() < b.degree()) std::swap(a, b);
        IntPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.lc() < 0) a = negate(a);
    return a;
}

// Sign of p(x) at the rational point num/den (den > 0), via the integer value
// sum c_i * num^i * den^(deg-i).
inline int sign_at_rational(const IntPoly& p, const Int& num, const Int& den) {
    if (p.is_zero()) return 0;
    Int acc = p.c.back();
    Int dpow = 1;
    for (int i = p.degree() - 1; i >= 0; --i) {
        dpow *= den;
        acc = acc * num + p.c[static_cast<std::size_t>(i)] * dpow;
    }
    return sign_of(acc);
}

inline int sign_at(const IntPoly& p, const Rat& x) {
    return sign_at_rational(p, rat_num(x), rat_den(x));
}

inline bool is_root(const IntPoly& p, const Rat& x) { return sign_at(p, x) == 0; }

inline int sign_at_pos_inf(const IntPoly& p) { return p.is_zero() ? 0 : sign_of(p.lc()); }

inline int sign_at_neg_inf(const IntPoly& p) {
    if (p.is_zero()) return 0;
    return (p.degree() % 2 == 0) ? sign_of(p.lc()) : -sign_of(p.lc());
}

// Sturm chain of a squarefree polynomial. Built with pseudo-remainders; the
// sign flip below compensates for a negative pseudo-remainder multiplier so
// each element keeps the sign of the true remainder sequence.
struct SturmChain {
    std::vector<IntPoly> seq;

    static SturmChain build(const IntPoly& f) {
        SturmChain s;
        s.seq.push_back(f);
        IntPoly d = derivative(f);
        if (d.is_zero()) return s;
        s.seq.push_back(primitive_part(d));
        while (true) {
            const IntPoly& a = s.seq[s.seq.size() - 2];
            const IntPoly& b = s.seq[s.seq.size() - 1];
            if (b.degree() <= 0) break;
            const int delta = a.degree() - b.degree() + 1;
            IntPoly r = pseudo_rem(a, b);
            if (r.is_zero()) break;  // only for non-squarefree input
            const bool mult_negative = (b.lc() < 0) && (delta % 2 == 1);
            if (!mult_negative) r = negate(r);
            s.seq.push_back(primitive_part(r));
        }
        return s;
    }

    // Sign variations at a finite rational point, or at -inf/+inf when the
    // bound is absent (at_pos_inf selects which end).
    int variations(const std::optional<Rat>& x, bool at_pos_inf = true) const {
        int count = 0, prev = 0;
        for (const IntPoly& p : seq) {
            const int sg = x.has_value() ? sign_at(p, *x)
                                         : (at_pos_inf ? sign_at_pos_inf(p) : sign_at_neg_inf(p));
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++count;
            prev = sg;
        }
        return count;
    }
};

// One squarefree factor of a polynomial together with its Yun multiplicity
// and a ready-to-query Sturm chain.
struct SquarefreeFactor {
    IntPoly poly;
    int multiplicity = 1;
    SturmChain sturm;
};

// Yun decomposition of a primitive polynomial with positive leading
// coefficient: f = prod factors[i].poly ^ factors[i].multiplicity.
inline std::vector<SquarefreeFactor> yun_squarefree(const IntPoly& f) {
    std::vector<SquarefreeFactor> out;
    if (f.degree() < 1) return out;
    IntPoly fp = derivative(f);
    IntPoly g = poly_gcd(f, fp);
    if (g.degree() == 0) {
        out.push_back({f, 1, SturmChain::build(f)});
        return out;
    }
    IntPoly w = exact_div(f, g);
    IntPoly y = exact_div(fp, g);
    IntPoly z = subtract(y, derivative(w));
    int i = 1;
    while (w.degree() > 0) {
        IntPoly h = poly_gcd(w, z);
        if (h.degree() > 0) out.push_back({h, i, SturmChain::build(h)});
        w = exact_div(w, h);
        y = exact_div(z, h);
        z = subtract(y, derivative(w));
        ++i;
    }
    return out;
}

inline std::string to_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Int& v = p.c[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        if (!out.empty()) out += (v > 0) ? " + " : " - ";
        else if (v < 0) out += "-";
        Int av = boost::multiprecision::abs(v);
        const bool unit = (av == 1 && i > 0);
        if (!unit) out += av.str();
        if (i > 0) {
            if (!unit) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace dlspectra
