#include "solchaos/dynamics.hpp"

#include <boost/numeric/odeint.hpp>

#include <array>
#include <cmath>
#include <stdexcept>

#include "solchaos/errors.hpp"

namespace solchaos {

namespace {

namespace ode = boost::numeric::odeint;

using State2 = std::array<double, 2>;
using State4 = std::array<double, 4>;

/// The escape guard throws from inside the right-hand side so that runaway
/// states (possible for user-supplied g1 > 0) cannot stall the step control
/// on non-finite error estimates.
struct DuffingRhs {
    const DimensionlessParams& d;
    const LatticeConfig& l;
    double escape;

    void operator()(const State2& x, State2& dx, double xi) const {
        if (!(std::fabs(x[0]) <= escape) || !(std::fabs(x[1]) <= escape))
            throw UnboundedError(xi, 0);
        dx[0] = x[1];
        dx[1] = (d.g1 * x[0] * x[0] - d.D + lattice_potential(xi, l)) * x[0];
    }
};

/// Trajectory plus tangent vector of the variational equation
/// dR'' = (-D + 3 g1 R^2 + V_op(xi)) dR.
struct VariationalRhs {
    const DimensionlessParams& d;
    const LatticeConfig& l;
    double escape;

    void operator()(const State4& x, State4& dx, double xi) const {
        if (!(std::fabs(x[0]) <= escape) || !(std::fabs(x[1]) <= escape))
            throw UnboundedError(xi, 0);
        const double vop = lattice_potential(xi, l);
        dx[0] = x[1];
        dx[1] = (d.g1 * x[0] * x[0] - d.D + vop) * x[0];
        dx[2] = x[3];
        dx[3] = (3.0 * d.g1 * x[0] * x[0] - d.D + vop) * x[2];
    }
};

template <typename State, typename Rhs>
void advance(State& x, Rhs& rhs, double xi0, double xi1, const StepControl& sc) {
    if (xi1 == xi0) return;
    auto stepper = ode::make_controlled<ode::runge_kutta_fehlberg78<State>>(sc.abs_tol, sc.rel_tol);
    const double dt0 = (xi1 > xi0 ? 1.0 : -1.0) * std::min(0.1, std::fabs(xi1 - xi0));
    ode::integrate_adaptive(stepper, rhs, x, xi0, xi1, dt0);
}

struct VariationalRun {
    double lambda = 0;
    double tail_variance = 0;
    int renorm_count = 0;
    double diameter = 0; // extent of the stroboscopic orbit
};

VariationalRun run_variational(const PhaseState& s0, int n_iters, int drop,
                               const DimensionlessParams& d, const LatticeConfig& l,
                               const StepControl& sc, double xi_start = 0.0) {
    if (n_iters <= drop || drop < 0)
        throw std::invalid_argument("need 0 <= drop < n_iters");
    const double T = stroboscopic_period(l);
    VariationalRhs rhs{d, l, sc.escape_radius};
    State4 x{s0.R, s0.Rp, 1.0, 0.0};

    double r_lo = s0.R, r_hi = s0.R, p_lo = s0.Rp, p_hi = s0.Rp;
    double sum = 0.0, sum_sq = 0.0;
    int tail = 0;
    for (int j = 1; j <= n_iters; ++j) {
        try {
            advance(x, rhs, xi_start + (j - 1) * T, xi_start + j * T, sc);
        } catch (UnboundedError& e) {
            e.iteration = static_cast<std::size_t>(j);
            throw;
        }
        const double growth = std::hypot(x[2], x[3]);
        x[2] /= growth;
        x[3] /= growth;
        if (j > drop) {
            const double lg = std::log(growth);
            sum += lg;
            sum_sq += lg * lg;
            ++tail;
        }
        r_lo = std::min(r_lo, x[0]);
        r_hi = std::max(r_hi, x[0]);
        p_lo = std::min(p_lo, x[1]);
        p_hi = std::max(p_hi, x[1]);
    }
    VariationalRun out;
    out.renorm_count = n_iters;
    out.lambda = sum / (tail * T);
    const double mean = sum / tail;
    out.tail_variance = tail > 1 ? (sum_sq - tail * mean * mean) / (tail - 1) : 0.0;
    out.diameter = std::hypot(r_hi - r_lo, p_hi - p_lo);
    return out;
}

}

PhaseState integrate(const PhaseState& s0, double xi0, double xi1,
                     const DimensionlessParams& d, const LatticeConfig& l,
                     const StepControl& sc) {
    if (!std::isfinite(s0.R) || !std::isfinite(s0.Rp))
        throw std::invalid_argument("initial state must be finite");
    DuffingRhs rhs{d, l, sc.escape_radius};
    State2 x{s0.R, s0.Rp};
    advance(x, rhs, xi0, xi1, sc);
    return {x[0], x[1]};
}

double stroboscopic_period(const LatticeConfig& l) {
    return (l.gamma.rational ? l.gamma.q : 1) * kPi / l.k;
}

PoincareSection poincare_section(const PhaseState& s0, int n_iters, int drop,
                                 const DimensionlessParams& d, const LatticeConfig& l,
                                 const StepControl& sc) {
    if (n_iters <= drop || drop < 0)
        throw std::invalid_argument("need 0 <= drop < n_iters");
    PoincareSection section;
    section.T = stroboscopic_period(l);
    section.n_iters = n_iters;
    section.drop = drop;
    section.origin = s0;
    section.quasiperiodic = !l.gamma.rational;
    section.points.reserve(n_iters - drop + 1);

    DuffingRhs rhs{d, l, sc.escape_radius};
    State2 x{s0.R, s0.Rp};
    if (drop == 0) section.points.push_back(s0);
    for (int j = 1; j <= n_iters; ++j) {
        try {
            advance(x, rhs, (j - 1) * section.T, j * section.T, sc);
        } catch (UnboundedError& e) {
            e.iteration = static_cast<std::size_t>(j);
            throw;
        }
        if (j >= drop) section.points.push_back({x[0], x[1]});
    }
    return section;
}

double lyapunov(const PhaseState& s0, int n_iters, const DimensionlessParams& d,
                const LatticeConfig& l, const StepControl& sc, int drop, double xi_start) {
    return run_variational(s0, n_iters, drop, d, l, sc, xi_start).lambda;
}

TrajectoryClass classify_trajectory(const PhaseState& s0, const DimensionlessParams& d,
                                    const LatticeConfig& l, const ClassifyPolicy& policy) {
    TrajectoryClass tc;
    try {
        const VariationalRun run =
            run_variational(s0, policy.n_iters, policy.drop, d, l, policy.step);
        tc.lambda = run.lambda;
        tc.tail_variance = run.tail_variance;
        tc.renorm_count = run.renorm_count;
        tc.iterations_reached = static_cast<std::size_t>(policy.n_iters);
        // A stroboscopic orbit that never leaves its starting point (an
        // equilibrium or a period-1 orbit) is regular by definition even when
        // the tangent flow carries a positive saddle exponent.
        const double scale = 1.0 + std::max(std::fabs(s0.R), std::fabs(s0.Rp));
        if (run.diameter < 1e-8 * scale) {
            tc.stationary = true;
            tc.lambda = 0.0;
            tc.label = TrajectoryLabel::Regular;
        } else {
            tc.label = tc.lambda > policy.lambda_threshold ? TrajectoryLabel::Chaotic
                                                           : TrajectoryLabel::Regular;
        }
    } catch (const UnboundedError& e) {
        tc.label = TrajectoryLabel::Unbounded;
        tc.lambda = std::nan("");
        tc.iterations_reached = e.iteration;
    }
    return tc;
}

const char* to_string(TrajectoryLabel label) {
    switch (label) {
        case TrajectoryLabel::Regular: return "Regular";
        case TrajectoryLabel::Chaotic: return "Chaotic";
        case TrajectoryLabel::Unbounded: return "Unbounded";
    }
    return "?";
}

}
