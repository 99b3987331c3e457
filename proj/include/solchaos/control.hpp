#pragma once

#include "solchaos/dynamics.hpp"
#include "solchaos/params.hpp"

namespace solchaos {

/** Chaos suppression method 1: switch the secondary lattice's wave-vector
 *  ratio from an integer to an irrational value (only gamma changes).
 *  Requires phi = 0 and integer gamma; rejects a rational gamma_new.
 */
LatticeConfig apply_method1(const LatticeConfig& l, const GammaRatio& gamma_new);

/** Chaos suppression method 2: switch the phase difference from zero to a
 *  nonzero value (default pi/4). Requires gamma = 2 and phi = 0; rejects
 *  phi_new = 0.
 */
LatticeConfig apply_method2(const LatticeConfig& l, double phi_new = kPi / 4.0);

struct SuppressionReport {
    double c0 = 0;
    double M_before = 0;
    double M_after = 0;
    bool suppressed = false; // |M_after| > tol at the formerly realized zero
};

/// Pointwise check at a zero of the before-config; throws NotAZeroError when
/// |M_before(c0)| >= tol.
SuppressionReport suppression_check(double c0, const LatticeConfig& before,
                                    const LatticeConfig& after, const DimensionlessParams& d,
                                    double tol);

struct SwitchingResult {
    double xi_switch = 0; // snapped to the nearest before-config strobe time
    double lambda_before = 0;
    double lambda_after = 0;
};

/** Integrate with `before` for xi < xi_switch and `after` beyond, returning
 *  Lyapunov estimates on the two segments. The after segment runs
 *  policy.n_iters periods; both segments drop policy.drop transient periods.
 *  The switch is instantaneous.
 */
SwitchingResult switching_experiment(const PhaseState& s0, double xi_switch,
                                     const LatticeConfig& before, const LatticeConfig& after,
                                     const DimensionlessParams& d,
                                     const ClassifyPolicy& policy = {});

}
