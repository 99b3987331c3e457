#pragma once

#include <cstddef>
#include <vector>

#include "solchaos/params.hpp"

namespace solchaos {

/// Adaptive step control for the embedded Runge-Kutta pair.
struct StepControl {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double escape_radius = 1e3; // |R| or |R'| beyond this raises UnboundedError
};

/// Integrate the driven Duffing equation from xi0 to xi1.
PhaseState integrate(const PhaseState& s0, double xi0, double xi1,
                     const DimensionlessParams& d, const LatticeConfig& l,
                     const StepControl& sc = {});

/// Stroboscopic period: q pi / k for rational gamma = p/q. For irrational
/// gamma the primary-lattice period pi/k is used and the section is of a
/// quasiperiodically forced system (flagged in PoincareSection).
double stroboscopic_period(const LatticeConfig& l);

struct PoincareSection {
    std::vector<PhaseState> points; // iterates j = drop .. n_iters
    double T = 0;
    int n_iters = 0;
    int drop = 0;
    PhaseState origin;
    bool quasiperiodic = false; // true when gamma is irrational (T = pi/k)
};

/// Iterate the stroboscopic map n_iters times from s0 and keep iterates
/// j = drop .. n_iters (the first `drop` transients are discarded).
PoincareSection poincare_section(const PhaseState& s0, int n_iters, int drop,
                                 const DimensionlessParams& d, const LatticeConfig& l,
                                 const StepControl& sc = {});

/** Largest Lyapunov exponent per unit xi from the variational system
 *  dR'' = (-D + 3 g1 R^2 + V_op(xi)) dR integrated alongside the trajectory,
 *  with the tangent renormalized every period; growth over the first `drop`
 *  periods is excluded from the average. `xi_start` sets the drive phase at
 *  which s0 is taken (the segment runs over [xi_start, xi_start + n_iters T]).
 */
double lyapunov(const PhaseState& s0, int n_iters, const DimensionlessParams& d,
                const LatticeConfig& l, const StepControl& sc = {}, int drop = 0,
                double xi_start = 0.0);

enum class TrajectoryLabel { Regular, Chaotic, Unbounded };

struct ClassifyPolicy {
    int n_iters = 3000;
    int drop = 100;
    double lambda_threshold = 0.01; // per xi-unit
    StepControl step;
};

struct TrajectoryClass {
    TrajectoryLabel label = TrajectoryLabel::Regular;
    double lambda = 0;        // NaN for Unbounded
    double tail_variance = 0; // variance of per-period log growth over the tail
    int renorm_count = 0;
    bool stationary = false;  // stroboscopic orbit collapsed to a point (equilibrium
                              // or period-1 orbit; labeled Regular regardless of lambda)
    std::size_t iterations_reached = 0;
};

/// Chaotic <=> lambda > threshold and bounded; Unbounded trips the escape guard.
TrajectoryClass classify_trajectory(const PhaseState& s0, const DimensionlessParams& d,
                                    const LatticeConfig& l, const ClassifyPolicy& policy = {});

const char* to_string(TrajectoryLabel label);

}
