#include "solchaos/control.hpp"

#include <cmath>
#include <stdexcept>

#include "solchaos/errors.hpp"
#include "solchaos/melnikov.hpp"

namespace solchaos {

LatticeConfig apply_method1(const LatticeConfig& l, const GammaRatio& gamma_new) {
    if (l.phi != 0.0)
        throw std::invalid_argument("method 1 starts from phi = 0");
    if (!l.gamma.is_integer())
        throw std::invalid_argument("method 1 starts from integer gamma");
    if (gamma_new.rational)
        throw std::invalid_argument("method 1 requires an irrational replacement gamma");
    LatticeConfig out = l;
    out.gamma = gamma_new;
    return out;
}

LatticeConfig apply_method2(const LatticeConfig& l, double phi_new) {
    if (!l.gamma.is_integer() || l.gamma.p != 2)
        throw std::invalid_argument("method 2 starts from gamma = 2");
    if (l.phi != 0.0)
        throw std::invalid_argument("method 2 starts from phi = 0");
    if (phi_new == 0.0)
        throw std::invalid_argument("method 2 requires a nonzero phi");
    LatticeConfig out = l;
    out.phi = phi_new;
    return out;
}

SuppressionReport suppression_check(double c0, const LatticeConfig& before,
                                    const LatticeConfig& after, const DimensionlessParams& d,
                                    double tol) {
    SuppressionReport report;
    report.c0 = c0;
    report.M_before = melnikov(c0, d, before);
    if (!(std::fabs(report.M_before) < tol))
        throw NotAZeroError("c0 is not a zero of the before-configuration (|M| = " +
                            std::to_string(std::fabs(report.M_before)) + ")");
    report.M_after = melnikov(c0, d, after);
    report.suppressed = std::fabs(report.M_after) > tol;
    return report;
}

SwitchingResult switching_experiment(const PhaseState& s0, double xi_switch,
                                     const LatticeConfig& before, const LatticeConfig& after,
                                     const DimensionlessParams& d, const ClassifyPolicy& policy) {
    const double t_before = stroboscopic_period(before);
    const int n_before = static_cast<int>(std::llround(xi_switch / t_before));
    if (n_before <= policy.drop)
        throw std::invalid_argument("xi_switch too small: before-segment shorter than the transient");

    SwitchingResult out;
    out.xi_switch = n_before * t_before; // snap to the strobe grid

    out.lambda_before = lyapunov(s0, n_before, d, before, policy.step, policy.drop);
    // The drive phase is continuous across the switch: the trajectory carries
    // on in the same xi variable, only the lattice parameters jump.
    const PhaseState at_switch = integrate(s0, 0.0, out.xi_switch, d, before, policy.step);
    out.lambda_after = lyapunov(at_switch, policy.n_iters, d, after, policy.step, policy.drop,
                                out.xi_switch);
    return out;
}

}
