#include "solchaos/soliton.hpp"

#include <cmath>
#include <stdexcept>

#include "solchaos/errors.hpp"
#include "solchaos/quadrature.hpp"

namespace solchaos {

namespace {

double sech(double u) { return 1.0 / std::cosh(u); }

void require_soliton_regime(const DimensionlessParams& d) {
    if (!(d.D < 0.0) || !(d.g1 < 0.0))
        throw std::domain_error("soliton construction requires D < 0 and g1 < 0");
}

}

SolitonConfig make_soliton_config(const DimensionlessParams& d, const LatticeConfig& l,
                                  double c0, double xi0) {
    require_soliton_regime(d);
    return {d, l, c0, xi0};
}

double soliton_peak(const DimensionlessParams& d) {
    require_soliton_regime(d);
    return std::sqrt(2.0 * d.D / d.g1);
}

double r0(double xi, const SolitonConfig& cfg) {
    const double om = std::sqrt(-cfg.d.D);
    return soliton_peak(cfg.d) * sech(om * (xi + cfg.c0));
}

double c0_from_condition(double xi0, double R_at_xi0, int slope_sign,
                         const DimensionlessParams& d) {
    if (slope_sign != 1 && slope_sign != -1)
        throw std::invalid_argument("slope_sign must be +1 or -1");
    const double peak = soliton_peak(d);
    const double om = std::sqrt(-d.D);
    double y = R_at_xi0 / peak;
    if (!(R_at_xi0 > 0.0) || y > 1.0 + 1e-12)
        throw OffOrbitError("R(xi0) must lie in (0, sqrt(2D/g1)] on the homoclinic orbit");
    if (y > 1.0) y = 1.0;
    // arcsech(y) = log((1 + sqrt(1 - y^2))/y); R0' < 0 on the u > 0 branch.
    double u0 = std::log((1.0 + std::sqrt((1.0 - y) * (1.0 + y))) / y);
    if (slope_sign > 0) u0 = -u0;
    return u0 / om - xi0;
}

double f_solution(double xi, const SolitonConfig& cfg) {
    const double om = std::sqrt(-cfg.d.D);
    const double u = om * (xi + cfg.c0);
    return std::sqrt(2.0 / -cfg.d.g1) * cfg.d.D * sech(u) * std::tanh(u);
}

double h_solution(double xi, const SolitonConfig& cfg) {
    const double om = std::sqrt(-cfg.d.D);
    const double u = om * (xi + cfg.c0);
    const double sh = std::sinh(u);
    const double bracket = 6.0 * u * std::tanh(u) + 2.0 * sh * sh - 4.0;
    return -std::sqrt(-2.0 * cfg.d.g1) / (8.0 * om * om * om) * sech(u) * bracket;
}

double epsilon_drive(double xi, const SolitonConfig& cfg) {
    return lattice_potential(xi, cfg.l) * r0(xi, cfg);
}

double default_cutoff(const DimensionlessParams& d) {
    return 40.0 / std::sqrt(-d.D);
}

double r1(double xi, const SolitonConfig& cfg, const R1Options& opt) {
    const double L = opt.cutoff_L > 0.0 ? opt.cutoff_L : default_cutoff(cfg.d);
    const double q_ref = std::isnan(opt.q_ref) ? -cfg.c0 : opt.q_ref;
    const auto fe = [&](double x) { return f_solution(x, cfg) * epsilon_drive(x, cfg); };
    const auto he = [&](double x) { return h_solution(x, cfg) * epsilon_drive(x, cfg); };
    const double i1 = integrate_gk(fe, -L, xi, opt.quad_tol).value;
    const double i2 = integrate_gk(he, q_ref, xi, opt.quad_tol).value;
    return h_solution(xi, cfg) * i1 - f_solution(xi, cfg) * i2;
}

std::pair<double, double> boundedness_I(const SolitonConfig& cfg, double L, double quad_tol) {
    if (!(L > 0.0)) throw std::invalid_argument("cutoff L must be positive");
    const auto fe = [&](double x) { return f_solution(x, cfg) * epsilon_drive(x, cfg); };
    // P = -L: I- is the degenerate integral over [-L, -L]; I+ - I- is the
    // Melnikov integral by construction.
    const double i_plus = integrate_gk(fe, -L, L, quad_tol).value;
    return {i_plus, 0.0};
}

std::complex<double> wavefunction(double x, double t, const SolitonConfig& cfg,
                                  const WaveScale& scale, double theta_offset,
                                  const R1Options& opt) {
    if (cfg.d.C != 0.0) throw std::domain_error("wavefunction requires C = 0");
    const double xt = scale.k0 * x;
    const double tt = scale.time_scale * t;
    const double xi = xt + cfg.d.v * tt;
    const double amplitude = r0(xi, cfg) + (cfg.l.V1 != 0.0 || cfg.l.V2 != 0.0
                                                ? r1(xi, cfg, opt)
                                                : 0.0);
    const double theta = -(cfg.d.v / 2.0 + cfg.d.alpha) * xi + theta_offset;
    const double phase = theta + cfg.d.alpha * xt + cfg.d.beta * tt;
    return std::polar(1.0, phase) * amplitude;
}

std::vector<WaveSample> wave_profile(const SolitonConfig& cfg, double xi_lo, double xi_hi,
                                     int n_points, double theta_offset, const R1Options& opt) {
    if (n_points < 2) throw std::invalid_argument("wave_profile needs at least 2 points");
    if (!(xi_hi > xi_lo)) throw std::invalid_argument("xi range must be increasing");

    const double L = opt.cutoff_L > 0.0 ? opt.cutoff_L : default_cutoff(cfg.d);
    const double q_ref = std::isnan(opt.q_ref) ? -cfg.c0 : opt.q_ref;
    const bool driven = cfg.l.V1 != 0.0 || cfg.l.V2 != 0.0;
    const auto fe = [&](double x) { return f_solution(x, cfg) * epsilon_drive(x, cfg); };
    const auto he = [&](double x) { return h_solution(x, cfg) * epsilon_drive(x, cfg); };

    std::vector<WaveSample> out(n_points);
    const double step = (xi_hi - xi_lo) / (n_points - 1);
    // The two R1 integrals advance incrementally from grid point to grid point.
    double i1 = 0.0, i2 = 0.0, prev = 0.0;
    if (driven) {
        i1 = integrate_gk(fe, -L, xi_lo, opt.quad_tol).value;
        i2 = integrate_gk(he, q_ref, xi_lo, opt.quad_tol).value;
        prev = xi_lo;
    }
    for (int i = 0; i < n_points; ++i) {
        const double xi = xi_lo + i * step;
        WaveSample& w = out[i];
        w.xi = xi;
        w.R0 = r0(xi, cfg);
        if (driven) {
            i1 += integrate_gk(fe, prev, xi, opt.quad_tol).value;
            i2 += integrate_gk(he, prev, xi, opt.quad_tol).value;
            prev = xi;
            w.R1 = h_solution(xi, cfg) * i1 - f_solution(xi, cfg) * i2;
        }
        w.R = w.R0 + w.R1;
        w.theta = -(cfg.d.v / 2.0 + cfg.d.alpha) * xi + theta_offset;
        const double phase = w.theta + cfg.d.alpha * xi; // snapshot at t~ = 0, x~ = xi
        w.psi_re = w.R * std::cos(phase);
        w.psi_im = w.R * std::sin(phase);
        w.perturb_ratio = w.R0 != 0.0 ? std::fabs(w.R1) / std::fabs(w.R0) : 0.0;
    }
    return out;
}

}
