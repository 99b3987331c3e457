#pragma once

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <cstddef>
#include <utility>

#include "solchaos/errors.hpp"

namespace solchaos {

struct QuadratureResult {
    double value = 0;
    double error = 0; // estimated absolute error
    double l1 = 0;    // integral of |f|
};

/** Adaptive (G7,K15) Gauss-Kronrod integration of f over [a, b].
 *
 *  `tol` controls the per-subinterval relative error; the absolute error of
 *  the total then scales with the L1 norm, which is the right behaviour for
 *  strongly cancelling integrands. Throws QuadratureError when the estimated
 *  error exceeds tol * max(1, L1) after the depth budget is spent.
 */
template <typename F>
QuadratureResult integrate_gk(F&& f, double a, double b, double tol = 1e-13,
                              unsigned max_depth = 17) {
    QuadratureResult r;
    if (a == b) return r;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    r.value = sign * GK::integrate(f, a, b, max_depth, tol, &r.error, &r.l1);
    if (!(r.error <= tol * std::max(1.0, r.l1)))
        throw QuadratureError("adaptive quadrature failed to reach tolerance " +
                              std::to_string(tol) + " (error estimate " +
                              std::to_string(r.error) + ")");
    return r;
}

namespace detail {

template <typename F>
double simpson_rec(F& f, double a, double m, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) throw QuadratureError("adaptive Simpson depth budget exhausted");
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return simpson_rec(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}

/// Adaptive Simpson integration; independent of the Gauss-Kronrod path and
/// used to cross-check it. `tol` is an absolute error target.
template <typename F>
double integrate_simpson(F&& f, double a, double b, double tol = 1e-12, int max_depth = 48) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return sign * detail::simpson_rec(f, a, m, b, fa, fm, fb, whole, tol, max_depth);
}

}
