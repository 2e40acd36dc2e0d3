#pragma once

#include <cmath>
#include <limits>
#include <utility>

#include "orlicz/errors.hpp"

// Small 1-D numeric kit shared by the norm backends, the conjugation
// routine, the modulus scans and the Stieltjes quadrature. Everything here
// is deterministic: fixed iteration counts, no randomized pivots.

namespace orlicz::num {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kGolden = 0.6180339887498948482;

/// Golden-section minimum of a unimodal f on [lo, hi].
/// Returns the argmin; the caller re-evaluates f if it needs the value.
template <typename F>
double golden_min(F&& f, double lo, double hi, int iters = 80) {
    double a = lo, b = hi;
    double x1 = b - kGolden * (b - a);
    double x2 = a + kGolden * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kGolden * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kGolden * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

/// Golden-section maximum of a unimodal f on [lo, hi]; tolerates -inf
/// plateaus at the right end (ties shrink the right side).
template <typename F>
double golden_max_arg(F&& f, double lo, double hi, int iters = 80) {
    return golden_min([&](double x) { return -f(x); }, lo, hi, iters);
}

/// Largest x in [lo, hi] with g(x) <= target, for nonincreasing g with
/// g(lo) > target >= g(hi). Plain bisection; the interval is halved
/// `iters` times.
template <typename F>
double bisect_nonincreasing(F&& g, double lo, double hi, double target, int iters = 100) {
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) <= target)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

/// Largest s >= 0 with h(s) <= target, for nondecreasing h with h(0) <= target.
/// Expands geometrically from s0, then bisects. Jump discontinuities
/// (h = +inf past a boundary) are fine: the bisection converges to the
/// boundary from below.
template <typename F>
double max_feasible_nondecreasing(F&& h, double s0, double target, int expand_limit = 200,
                                  int iters = 100) {
    double hi = s0;
    int guard = 0;
    while (h(hi) <= target) {
        hi *= 2.0;
        if (++guard > expand_limit) return hi;  // feasible everywhere probed
    }
    double lo = (guard == 0) ? 0.0 : hi * 0.5;
    for (int i = 0; i < iters; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (h(mid) <= target)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

namespace detail {

template <typename F>
double adaptive_simpson_rec(F& f, double a, double b, double fa, double fm, double fb, double whole,
                            double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm))
        throw IntegrationError("non-finite integrand sample in adaptive quadrature");
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] with absolute tolerance.
/// The interval is pre-split into `panels` equal panels so that integrands
/// oscillating faster than the base rule are still caught.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, double abs_tol, int max_depth = 40,
                        int panels = 8) {
    if (!(b > a)) return 0.0;
    double total = 0.0;
    const double w = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double pa = a + p * w, pb = a + (p + 1) * w;
        const double pm = 0.5 * (pa + pb);
        const double fa = f(pa), fm = f(pm), fb = f(pb);
        if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
            throw IntegrationError("non-finite integrand sample in adaptive quadrature");
        const double whole = (pb - pa) / 6.0 * (fa + 4.0 * fm + fb);
        total += detail::adaptive_simpson_rec(f, pa, pb, fa, fm, fb, whole,
                                              abs_tol / panels, max_depth);
    }
    return total;
}

}  // namespace orlicz::num
