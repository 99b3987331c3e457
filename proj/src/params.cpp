#include "solchaos/params.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace solchaos {

double recoil_energy(double mass, double k0) {
    return kHbar * kHbar * k0 * k0 / (2.0 * mass);
}

GammaRatio GammaRatio::from_integer(int n) { return from_fraction(n, 1); }

GammaRatio GammaRatio::from_fraction(int p, int q) {
    if (p <= 0 || q <= 0)
        throw std::invalid_argument("gamma = p/q requires positive integers");
    const int g = std::gcd(p, q);
    p /= g;
    q /= g;
    GammaRatio r;
    r.value = static_cast<double>(p) / static_cast<double>(q);
    r.rational = true;
    r.p = p;
    r.q = q;
    return r;
}

GammaRatio GammaRatio::irrational(double value, std::string tag) {
    if (!(value > 0.0))
        throw std::invalid_argument("gamma must be positive");
    // A value that is exactly a small fraction contradicts the irrational flag.
    for (int q = 1; q <= 16; ++q) {
        const double pd = std::round(value * q);
        if (pd >= 1.0 && std::fabs(value - pd / q) <= 4.0 * 2.220446049250313e-16 * value)
            throw std::invalid_argument(
                "gamma flagged irrational but numerically equals " +
                std::to_string(static_cast<long>(pd)) + "/" + std::to_string(q));
    }
    GammaRatio r;
    r.value = value;
    r.rational = false;
    r.p = 0;
    r.q = 0;
    r.tag = std::move(tag);
    return r;
}

GammaRatio GammaRatio::sqrt2() { return irrational(std::sqrt(2.0), "sqrt2"); }

GammaRatio GammaRatio::golden() { return irrational((1.0 + std::sqrt(5.0)) / 2.0, "golden"); }

DimensionlessParams DimensionlessParams::from_ansatz(double v, double alpha, double beta,
                                                     double g1, double C) {
    if (C != 0.0)
        throw std::invalid_argument("the C != 0 branch is out of scope; C must be 0");
    DimensionlessParams d;
    d.v = v;
    d.alpha = alpha;
    d.beta = beta;
    d.g1 = g1;
    d.D = v * v / 4.0 + v * alpha - beta;
    d.C = 0.0;
    return d;
}

DimensionlessParams DimensionlessParams::from_D(double D, double g1, double C) {
    // v = alpha = 0, beta = -D keeps D = v^2/4 + v alpha - beta exact.
    return from_ansatz(0.0, 0.0, -D, g1, C);
}

LatticeConfig make_lattice(double V1, double V2, double k, GammaRatio gamma, double phi) {
    if (!(V1 >= 0.0) || !(V2 >= 0.0))
        throw std::invalid_argument("lattice depths must be non-negative");
    if (!(k > 0.0))
        throw std::invalid_argument("lattice wave vector k must be positive");
    LatticeConfig l;
    l.V1 = V1;
    l.V2 = V2;
    l.k = k;
    l.gamma = std::move(gamma);
    l.phi = phi;
    return l;
}

ReducedParams reduce_to_dimensionless(const PhysicalParams& p) {
    if (!(p.mass > 0.0)) throw std::invalid_argument("mass must be positive");
    if (!(p.omega_r > 0.0)) throw std::invalid_argument("omega_r must be positive");
    if (!(p.k0 > 0.0)) throw std::invalid_argument("k0 must be positive");

    const double e_r0 = recoil_energy(p.mass, p.k0);
    const double l_r = std::sqrt(kHbar / (p.mass * p.omega_r));

    const double v = 2.0 * p.mass * p.v_L / (kHbar * p.k0);
    const double alpha = p.alpha / p.k0;
    const double beta = kHbar * p.beta / e_r0;
    const double g1 = 4.0 * p.a_s / (p.k0 * l_r * l_r);

    ReducedParams out;
    out.d = DimensionlessParams::from_ansatz(v, alpha, beta, g1);
    const double k_lat = p.k_lattice > 0.0 ? p.k_lattice : p.k0;
    out.l = make_lattice(p.V1 / e_r0, p.V2 / e_r0, k_lat / p.k0, p.gamma, p.phi);

    if (out.d.D >= 0.0)
        out.warnings.push_back("D >= 0: outside the soliton/chaos regime");
    if (out.d.g1 >= 0.0)
        out.warnings.push_back("g1 >= 0: repulsive interaction, outside the soliton regime");
    return out;
}

PhysicalParams rescale_to_physical(const DimensionlessParams& d, const LatticeConfig& l,
                                   double mass, double omega_r, double k0) {
    if (!(mass > 0.0) || !(omega_r > 0.0) || !(k0 > 0.0))
        throw std::invalid_argument("mass, omega_r, k0 must be positive");
    const double e_r0 = recoil_energy(mass, k0);
    const double l_r = std::sqrt(kHbar / (mass * omega_r));
    PhysicalParams p;
    p.mass = mass;
    p.omega_r = omega_r;
    p.k0 = k0;
    p.k_lattice = l.k * k0;
    p.a_s = d.g1 * k0 * l_r * l_r / 4.0;
    p.V1 = l.V1 * e_r0;
    p.V2 = l.V2 * e_r0;
    p.gamma = l.gamma;
    p.phi = l.phi;
    p.v_L = d.v * kHbar * k0 / (2.0 * mass);
    p.alpha = d.alpha * k0;
    p.beta = d.beta * e_r0 / kHbar;
    return p;
}

double lattice_potential(double xi, const LatticeConfig& l) {
    const double c1 = std::cos(l.k * xi);
    const double c2 = std::cos(l.gamma.value * l.k * xi + l.phi);
    return l.V1 * c1 * c1 + l.V2 * c2 * c2;
}

PhaseDerivative duffing_rhs(const PhaseState& s, double xi, const DimensionlessParams& d,
                            const LatticeConfig& l) {
    return {s.Rp, (d.g1 * s.R * s.R - d.D + lattice_potential(xi, l)) * s.R};
}

}
