// Test-side oracles, independent of the library implementation paths they
// check:
//  - long-double mirrors of the closed-form solutions, so finite-difference
//    ODE residuals are not drowned by double-precision roundoff (the library
//    value is separately pinned to the mirror at full double precision);
//  - finite-difference stencils;
//  - the published Fig.-2 parameter set used throughout the tests.
#pragma once

#include <cmath>

#include "solchaos/params.hpp"

namespace oracles {

inline solchaos::DimensionlessParams fig2_params() {
    return solchaos::DimensionlessParams::from_D(-2.0, -0.5);
}

/// gamma = 2, k = 1, V1 = 0.04; V2 selects the region (0.08 -> A, 0.01 -> B).
inline solchaos::LatticeConfig fig2_lattice(double V2, double phi = 0.0) {
    return solchaos::make_lattice(0.04, V2, 1.0, solchaos::GammaRatio::from_integer(2), phi);
}

// Long-double mirrors of the soliton-frame closed forms.

inline long double r0_ld(long double xi, long double c0, long double D, long double g1) {
    const long double om = sqrtl(-D);
    return sqrtl(2.0L * D / g1) / coshl(om * (xi + c0));
}

inline long double f_ld(long double xi, long double c0, long double D, long double g1) {
    const long double om = sqrtl(-D);
    const long double u = om * (xi + c0);
    return sqrtl(2.0L / -g1) * D * tanhl(u) / coshl(u);
}

inline long double h_ld(long double xi, long double c0, long double D, long double g1) {
    const long double om = sqrtl(-D);
    const long double u = om * (xi + c0);
    const long double sh = sinhl(u);
    return -sqrtl(-2.0L * g1) / (8.0L * om * om * om) *
           (6.0L * u * tanhl(u) + 2.0L * sh * sh - 4.0L) / coshl(u);
}

/// 5-point central second derivative, O(h^4).
template <typename F>
long double fd_second(F&& f, long double x, long double h) {
    return (-f(x - 2 * h) + 16 * f(x - h) - 30 * f(x) + 16 * f(x + h) - f(x + 2 * h)) /
           (12 * h * h);
}

/// 3-point central first derivative, O(h^2).
template <typename F>
double fd_first(F&& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}
