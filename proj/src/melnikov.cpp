#include "solchaos/melnikov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "solchaos/errors.hpp"
#include "solchaos/parallel.hpp"
#include "solchaos/quadrature.hpp"
#include "solchaos/soliton.hpp"

namespace solchaos {

namespace {

double csch(double x) { return 1.0 / std::sinh(x); }

void require_melnikov_domain(const DimensionlessParams& d) {
    if (!(d.D < 0.0))
        throw std::domain_error("Melnikov function requires D < 0");
    if (d.g1 == 0.0)
        throw std::domain_error("Melnikov function requires g1 != 0");
}

/// Chebyshev polynomial of the second kind, U_{n}(x).
double chebyshev_u(int n, double x) {
    double u_prev = 1.0, u = 2.0 * x;
    if (n == 0) return u_prev;
    for (int i = 1; i < n; ++i) {
        const double next = 2.0 * x * u - u_prev;
        u_prev = u;
        u = next;
    }
    return u;
}

/// Minimize |M| by golden-section search on [a, b]; returns the abscissa.
template <typename F>
double minimize_abs(F&& f, double a, double b, double tol = 1e-13) {
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = std::fabs(f(x1));
    double f2 = std::fabs(f(x2));
    while (b - a > tol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = std::fabs(f(x1));
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = std::fabs(f(x2));
        }
    }
    return 0.5 * (a + b);
}

template <typename F>
double bisect(F&& f, double a, double b, double fa, double tol = 1e-13) {
    for (int i = 0; i < 80 && b - a > tol; ++i) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fa < 0.0) != (fm < 0.0))
            b = m;
        else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}

double melnikov_eta(double k, double g1) { return 2.0 * k * k * kPi / g1; }

double melnikov(double c0, const DimensionlessParams& d, const LatticeConfig& l) {
    require_melnikov_domain(d);
    const double om = std::sqrt(-d.D);
    const double g = l.gamma.value;
    return melnikov_eta(l.k, d.g1) *
           (l.V1 * csch(l.k * kPi / om) * std::sin(2.0 * c0 * l.k) +
            l.V2 * g * g * csch(g * l.k * kPi / om) * std::sin(2.0 * c0 * g * l.k - 2.0 * l.phi));
}

double melnikov_numeric(double c0, const DimensionlessParams& d, const LatticeConfig& l,
                        double cutoff_L, double quad_tol) {
    const SolitonConfig cfg = make_soliton_config(d, l, c0);
    const double L = cutoff_L > 0.0 ? cutoff_L : default_cutoff(d) + std::fabs(c0);
    const auto fe = [&](double x) { return f_solution(x, cfg) * epsilon_drive(x, cfg); };
    // Split at the soliton center so the adaptive scheme sees the bump edge-on.
    const double mid = std::clamp(-c0, -L, L);
    return integrate_gk(fe, -L, mid, quad_tol).value +
           integrate_gk(fe, mid, L, quad_tol).value;
}

double factor_X1(double c0, double k) { return std::sin(2.0 * c0 * k); }

double factor_XN(double c0, const DimensionlessParams& d, const LatticeConfig& l) {
    require_melnikov_domain(d);
    if (l.phi != 0.0)
        throw std::invalid_argument("factorization requires phi = 0");
    if (!l.gamma.is_integer() || l.gamma.p < 2)
        throw std::invalid_argument("factorization requires integer gamma >= 2");
    const int n = l.gamma.p;
    const double om = std::sqrt(-d.D);
    // U_{N-1}(cos 2 c0 k) extends sin(2 N c0 k)/sin(2 c0 k) through its
    // removable points; for N = 2 this is the closed form with 2 cos(2 c0 k).
    const double u = chebyshev_u(n - 1, std::cos(2.0 * c0 * l.k));
    return l.V1 * csch(l.k * kPi / om) +
           l.V2 * static_cast<double>(n) * n * csch(n * l.k * kPi / om) * u;
}

double melnikov_period(const LatticeConfig& l) {
    if (!l.gamma.rational)
        throw NoPeriodError(
            "M(c0) has no period for irrational gamma; use Monte Carlo estimation");
    return l.gamma.q * kPi / l.k;
}

MelnikovProfile count_zeros_per_period(const DimensionlessParams& d, const LatticeConfig& l,
                                       int resolution, double zero_tolerance) {
    require_melnikov_domain(d);
    const double period = melnikov_period(l);
    const int oscillations = std::max(l.gamma.p, l.gamma.q);
    if (resolution < 8 * oscillations)
        throw std::invalid_argument("resolution below 8 points per oscillation of M");

    MelnikovProfile profile;
    profile.d = d;
    profile.l = l;
    profile.period = period;

    const auto m = [&](double c) { return melnikov(c, d, l); };
    const double h = period / resolution;
    profile.samples.reserve(resolution);
    double max_abs = 0.0, slope_scale = 0.0;
    for (int j = 0; j < resolution; ++j) {
        const double c = j * h;
        profile.samples.emplace_back(c, m(c));
        max_abs = std::max(max_abs, std::fabs(profile.samples.back().second));
    }
    for (int j = 0; j < resolution; ++j) {
        const double next = profile.samples[(j + 1) % resolution].second;
        slope_scale = std::max(slope_scale, std::fabs(next - profile.samples[j].second) / h);
    }
    profile.max_abs_m = max_abs;
    if (max_abs == 0.0) {
        // Zero drive: M vanishes identically, the criterion is vacuous (n = 0).
        profile.zero_tolerance = 0.0;
        return profile;
    }
    const double tol = zero_tolerance > 0.0 ? zero_tolerance : 1e-10 * max_abs;
    profile.zero_tolerance = tol;

    const auto sample_m = [&](int j) { return profile.samples[((j % resolution) + resolution) % resolution].second; };

    std::vector<double> found;
    for (int j = 0; j < resolution; ++j) {
        const double c = j * h;
        const double mj = sample_m(j);
        const double mn = sample_m(j + 1);
        if (std::fabs(mj) <= tol) {
            found.push_back(c);
            continue;
        }
        if (std::fabs(mn) <= tol) continue; // handled as the next sample's hit
        if ((mj < 0.0) != (mn < 0.0)) {
            found.push_back(bisect(m, c, c + h, mj));
            continue;
        }
        // Tangential candidate: |M| local minimum without a sign change.
        const double mp = sample_m(j - 1);
        if (std::fabs(mj) <= std::fabs(mp) && std::fabs(mj) <= std::fabs(mn) &&
            std::fabs(mj) < 1e-4 * max_abs) {
            const double c_min = minimize_abs(m, c - h, c + h);
            if (std::fabs(m(c_min)) <= tol) found.push_back(c_min);
        }
    }

    std::sort(found.begin(), found.end());
    // Merge zeros within one sample spacing: the boundary's coinciding zeros
    // count as one location.
    std::vector<double> merged;
    for (double z : found) {
        if (z < 0.0) z += period;
        if (z >= period) z -= period;
        if (!merged.empty() && z - merged.back() < h) {
            if (std::fabs(m(z)) < std::fabs(m(merged.back()))) merged.back() = z;
        } else {
            merged.push_back(z);
        }
    }
    std::sort(merged.begin(), merged.end());
    if (merged.size() > 1 && merged.front() + period - merged.back() < h) merged.pop_back();

    const double hd = period * 1e-7;
    for (double z : merged) {
        const double slope = (m(z + hd) - m(z - hd)) / (2.0 * hd);
        const ZeroKind kind =
            std::fabs(slope) < 1e-6 * slope_scale ? ZeroKind::Tangential : ZeroKind::Simple;
        profile.zeros.push_back({z, kind});
    }
    return profile;
}

double boundary_V2b(double k, double D, double V1) {
    if (!(D < 0.0)) throw std::domain_error("boundary curve requires D < 0");
    if (!(k > 0.0)) throw std::invalid_argument("boundary curve requires k > 0");
    return V1 / 4.0 * std::cosh(k * kPi / std::sqrt(-D));
}

RegionLabel classify_region(const DimensionlessParams& d, const LatticeConfig& l,
                            double boundary_tolerance) {
    if (!l.gamma.is_integer() || l.gamma.p != 2)
        throw std::invalid_argument("region classification is defined for gamma = 2");
    if (l.phi != 0.0)
        throw std::invalid_argument("region classification is defined for phi = 0");
    RegionLabel out;
    out.v2b = boundary_V2b(l.k, d.D, l.V1);
    const double band = boundary_tolerance * out.v2b;
    if (l.V2 > out.v2b + band)
        out.region = Region::A;
    else if (l.V2 < out.v2b - band)
        out.region = Region::B;
    else
        out.region = Region::Boundary;
    return out;
}

double predicted_probability(const DimensionlessParams& d, const LatticeConfig& l, double P0) {
    if (!(P0 > 0.0 && P0 < 1.0))
        throw std::invalid_argument("P0 must lie in (0, 1)");
    return count_zeros_per_period(d, l).n() * P0 / 2.0;
}

RegionMap region_map(const std::vector<double>& k_axis, const std::vector<double>& v2_axis,
                     const DimensionlessParams& d, double V1, const GammaRatio& gamma,
                     double phi, int threads, int resolution) {
    const auto strictly_increasing = [](const std::vector<double>& a) {
        for (std::size_t i = 1; i < a.size(); ++i)
            if (!(a[i] > a[i - 1])) return false;
        return !a.empty();
    };
    if (!strictly_increasing(k_axis) || !strictly_increasing(v2_axis))
        throw std::invalid_argument("region_map axes must be strictly increasing");

    RegionMap map;
    map.k_axis = k_axis;
    map.v2_axis = v2_axis;
    map.cells.resize(k_axis.size() * v2_axis.size());
    const bool labeled = gamma.is_integer() && gamma.p == 2 && phi == 0.0;

    parallel_for(map.cells.size(), threads, [&](std::size_t idx) {
        const double k = k_axis[idx / v2_axis.size()];
        const double v2 = v2_axis[idx % v2_axis.size()];
        RegionCell& cell = map.cells[idx];
        cell.k = k;
        cell.V2 = v2;
        cell.v2b = std::nan("");
        try {
            const LatticeConfig lc = make_lattice(V1, v2, k, gamma, phi);
            cell.n = count_zeros_per_period(d, lc, resolution).n();
            if (labeled) {
                const RegionLabel rl = classify_region(d, lc);
                cell.region = rl.region;
                cell.v2b = rl.v2b;
            }
        } catch (const std::exception& e) {
            cell.error = e.what();
            cell.n = -1;
        }
    });
    return map;
}

}
