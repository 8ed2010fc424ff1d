#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dlspectra/matrix.hpp"

namespace dlspectra {

// A rational-endpoint interval with independent open/closed flags per side.
// Absent endpoints mean -inf / +inf. Covers every boundary convention the
// eigenvalue-location theorems use: [a,b), (a,b), [a,b], (a,b].
struct IntervalQuery {
    std::optional<Rat> lo;
    std::optional<Rat> hi;
    bool lo_closed = true;
    bool hi_closed = false;

    static IntervalQuery closed(Rat a, Rat b) { return {std::move(a), std::move(b), true, true}; }
    static IntervalQuery half_open(Rat a, Rat b) { return {std::move(a), std::move(b), true, false}; }
    static IntervalQuery open(Rat a, Rat b) { return {std::move(a), std::move(b), false, false}; }
    static IntervalQuery open_above(Rat a) { return {std::move(a), std::nullopt, false, false}; }
    static IntervalQuery closed_above(Rat a) { return {std::move(a), std::nullopt, true, false}; }
    static IntervalQuery all() { return {std::nullopt, std::nullopt, false, false}; }

    std::string describe() const {
        auto fmt = [](const std::optional<Rat>& r, const char* inf) {
            return r ? r->str() : std::string(inf);
        };
        return std::string(lo_closed && lo ? "[" : "(") + fmt(lo, "-inf") + "," +
               fmt(hi, "+inf") + (hi_closed && hi ? "]" : ")");
    }
};

namespace detail {

// Distinct roots of one squarefree factor inside the query interval.
// Sturm's theorem counts (a,b]; open/closed adjustments come from exact
// evaluation at the endpoints.
inline int distinct_roots_in(const SquarefreeFactor& f, const IntervalQuery& q) {
    if (q.lo && q.hi) {
        if (*q.lo > *q.hi) throw std::invalid_argument("interval: lo > hi");
        if (*q.lo == *q.hi) {
            if (!(q.lo_closed && q.hi_closed)) return 0;
            return is_root(f.poly, *q.lo) ? 1 : 0;
        }
    }
    const int v_lo = f.sturm.variations(q.lo, /*at_pos_inf=*/false);
    const int v_hi = f.sturm.variations(q.hi, /*at_pos_inf=*/true);
    int count = v_lo - v_hi;  // roots in (lo, hi]
    if (q.hi && !q.hi_closed && is_root(f.poly, *q.hi)) --count;
    if (q.lo && q.lo_closed && is_root(f.poly, *q.lo)) ++count;
    return count;
}

}  // namespace detail

// Number of roots (with multiplicity) of the characteristic polynomial in
// the interval. Exact: decides every boundary case by integer arithmetic.
inline int count_in_interval(const CharPoly& p, const IntervalQuery& q) {
    int total = 0;
    for (const auto& f : p.factors) total += f.multiplicity * detail::distinct_roots_in(f, q);
    return total;
}

// Multiplicity of an exact rational value as a root (0 if not a root).
inline int multiplicity_at(const CharPoly& p, const Rat& r) {
    for (const auto& f : p.factors)
        if (is_root(f.poly, r)) return f.multiplicity;
    return 0;
}

// All integer roots with multiplicities, scanned over [lo, hi]. Callers pass
// Gershgorin bounds of the originating matrix.
inline std::vector<std::pair<Int, int>> integer_roots_in(const CharPoly& p, const Int& lo,
                                                         const Int& hi) {
    std::vector<std::pair<Int, int>> out;
    for (Int r = lo; r <= hi; ++r) {
        int mult = multiplicity_at(p, Rat(r));
        if (mult > 0) out.emplace_back(r, mult);
    }
    return out;
}

// Cyclic Jacobi eigenvalue iteration for symmetric matrices. Returns all
// eigenvalues sorted descending. Convergence is quadratic; the sweep cap
// only trips on a genuine bug.
inline std::vector<double> jacobi_eigenvalues(const IntSymMatrix& mat) {
    const int n = mat.order;
    std::vector<std::vector<double>> a(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
    double scale = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<double>(mat.at(i, j));
            scale = std::max(scale, std::abs(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
        }
    if (n == 1) return {a[0][0]};

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                                  a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return std::sqrt(s);
    };

    const double tol = 1e-13 * std::max(1.0, scale) * n;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_norm() <= tol) break;
        if (sweep == 99) throw std::runtime_error("jacobi: failed to converge");
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
                if (apq == 0.0) continue;
                double app = a[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)];
                double aqq = a[static_cast<std::size_t>(q)][static_cast<std::size_t>(q)];
                double theta = (aqq - app) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)];
                    double akq = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)];
                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(p)] = c * akp - s * akq;
                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(q)] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)];
                    double aqk = a[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)];
                    a[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] = c * apk - s * aqk;
                    a[static_cast<std::size_t>(q)][static_cast<std::size_t>(k)] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

// Dual view of one matrix spectrum: floating eigenvalues for display and
// cross-checks, exact integer roots as the authoritative multiplicities.
struct Spectrum {
    std::vector<double> values;                   // descending
    std::vector<std::pair<Int, int>> int_roots;   // ascending, (value, multiplicity)
};

inline Spectrum spectrum_of(const IntSymMatrix& m, const CharPoly& p) {
    Spectrum s;
    s.values = jacobi_eigenvalues(m);
    auto [lo, hi] = gershgorin_bounds(m);
    s.int_roots = integer_roots_in(p, lo, hi);
    return s;
}

// Numeric interval count with snapping: values within snap of a rational
// endpoint are treated as sitting exactly on it. Used only to cross-check
// the exact Sturm counts.
inline int count_numeric(const std::vector<double>& values, const IntervalQuery& q,
                         double snap = 1e-6) {
    int count = 0;
    for (double v : values) {
        double x = v;
        if (q.lo) {
            double lo = static_cast<double>(*q.lo);
            if (std::abs(x - lo) <= snap) x = lo;
        }
        if (q.hi) {
            double hi = static_cast<double>(*q.hi);
            if (std::abs(x - hi) <= snap) x = hi;
        }
        bool ok = true;
        if (q.lo) {
            double lo = static_cast<double>(*q.lo);
            ok = q.lo_closed ? (x >= lo) : (x > lo);
        }
        if (ok && q.hi) {
            double hi = static_cast<double>(*q.hi);
            ok = q.hi_closed ? (x <= hi) : (x < hi);
        }
        if (ok) ++count;
    }
    return count;
}

// Gershgorin-derived spectral radius bound for the distance Laplacian:
// the largest eigenvalue never exceeds twice the maximum transmission.
// Verification is exact: no roots strictly above the bound.
inline std::pair<Int, bool> spectral_radius_bound(const DistanceData& d, const CharPoly& dl) {
    Int bound = Int(2) * d.tr_max;
    bool holds = count_in_interval(dl, IntervalQuery::open_above(Rat(bound))) == 0;
    return {bound, holds};
}

}  // namespace dlspectra
