// Command-line front end: every pipeline stage behind one binary with
// subcommands, emitting plot-ready CSV and machine-readable JSON reports.
//
// Exit codes: 0 ok, 2 configuration error, 3 analytic precondition violated
// (e.g. no period for irrational gamma), 4 numeric failure.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "solchaos/config.hpp"
#include "solchaos/control.hpp"
#include "solchaos/dynamics.hpp"
#include "solchaos/errors.hpp"
#include "solchaos/io.hpp"
#include "solchaos/melnikov.hpp"
#include "solchaos/montecarlo.hpp"
#include "solchaos/soliton.hpp"
#include "solchaos/version.hpp"

namespace {

using namespace solchaos;

struct Overrides {
    std::optional<double> V1, V2, k, phi, D, g1;
    std::optional<std::string> gamma;
};

struct Common {
    std::string config_path;
    std::string out = "solchaos_out";
    Overrides ovr;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--config", c.config_path, "JSON configuration file")->required();
    cmd->add_option("--out", c.out, "output base name (suffixes .csv/.json are appended)");
    cmd->add_option("--V1", c.ovr.V1, "override lattice V1");
    cmd->add_option("--V2", c.ovr.V2, "override lattice V2");
    cmd->add_option("--k", c.ovr.k, "override lattice k");
    cmd->add_option("--phi", c.ovr.phi, "override lattice phi");
    cmd->add_option("--gamma", c.ovr.gamma,
                    "override gamma: integer, p/q, sqrt2, golden, or irrational:<value>");
    cmd->add_option("--D", c.ovr.D, "override dimensionless D");
    cmd->add_option("--g1", c.ovr.g1, "override dimensionless g1");
}

GammaRatio parse_gamma_flag(const std::string& text) {
    if (text == "sqrt2") return GammaRatio::sqrt2();
    if (text == "golden") return GammaRatio::golden();
    if (text.rfind("irrational:", 0) == 0)
        return GammaRatio::irrational(std::stod(text.substr(11)));
    const auto slash = text.find('/');
    if (slash != std::string::npos)
        return GammaRatio::from_fraction(std::stoi(text.substr(0, slash)),
                                         std::stoi(text.substr(slash + 1)));
    return gamma_from_json(nlohmann::json::parse(text));
}

RunConfig load(const Common& c) {
    RunConfig rc = load_config(c.config_path);
    const Overrides& o = c.ovr;
    if (o.D) rc.d = DimensionlessParams::from_D(*o.D, rc.d.g1);
    if (o.g1) rc.d.g1 = *o.g1;
    if (o.V1 || o.V2 || o.k || o.phi || o.gamma) {
        rc.l = make_lattice(o.V1.value_or(rc.l.V1), o.V2.value_or(rc.l.V2),
                            o.k.value_or(rc.l.k),
                            o.gamma ? parse_gamma_flag(*o.gamma) : rc.l.gamma,
                            o.phi.value_or(rc.l.phi));
    }
    rc.snapshot = params_snapshot(rc.d, rc.l);
    for (const std::string& w : rc.warnings) std::cerr << "[warn] " << w << "\n";
    return rc;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = n > 1 ? lo + (hi - lo) * i / (n - 1) : lo;
    return v;
}

void parse_range(const std::string& text, double& lo, double& hi) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ConfigError("range must be lo:hi, got " + text);
    lo = std::stod(text.substr(0, colon));
    hi = std::stod(text.substr(colon + 1));
    if (!(hi > lo)) throw ConfigError("range must be increasing, got " + text);
}

int cmd_melnikov(const Common& c, int c0_grid) {
    const RunConfig rc = load(c);
    const MelnikovProfile profile = count_zeros_per_period(rc.d, rc.l, c0_grid);
    write_melnikov_csv(c.out + ".csv", profile, rc.snapshot);
    write_melnikov_json(c.out + ".json", profile, rc.snapshot);
    std::cout << "n = " << profile.n() << " zeros per period " << profile.period << "\n";
    return 0;
}

int cmd_region_map(const Common& c, const std::string& k_range, const std::string& v2_range,
                   const std::string& grid, int threads) {
    const RunConfig rc = load(c);
    double k_lo, k_hi, v_lo, v_hi;
    parse_range(k_range, k_lo, k_hi);
    parse_range(v2_range, v_lo, v_hi);
    const auto x = grid.find('x');
    if (x == std::string::npos) throw ConfigError("grid must be NKxNV, got " + grid);
    const int nk = std::stoi(grid.substr(0, x));
    const int nv = std::stoi(grid.substr(x + 1));
    if (nk < 1 || nv < 1) throw ConfigError("grid counts must be positive");
    const RegionMap map = region_map(linspace(k_lo, k_hi, nk), linspace(v_lo, v_hi, nv), rc.d,
                                     rc.l.V1, rc.l.gamma, rc.l.phi, threads);
    write_region_map_csv(c.out + ".csv", map, rc.snapshot);
    std::cout << map.cells.size() << " cells written\n";
    return 0;
}

int cmd_poincare(const Common& c, double R0, double Rp0, int iters, int drop) {
    const RunConfig rc = load(c);
    const PhaseState s0{R0, Rp0};
    const PoincareSection section = poincare_section(s0, iters, drop, rc.d, rc.l);
    write_poincare_csv(c.out + ".csv", section, rc.snapshot);
    ClassifyPolicy policy;
    policy.n_iters = iters;
    policy.drop = drop;
    const TrajectoryClass tc = classify_trajectory(s0, rc.d, rc.l, policy);
    write_classification_json(c.out + ".json", tc, policy, rc.snapshot);
    std::cout << to_string(tc.label) << " lambda = " << tc.lambda << "\n";
    return 0;
}

int cmd_probability(const Common& c, int trials, std::uint64_t seed, int iters, int drop,
                    double threshold, int threads, bool per_trial) {
    const RunConfig rc = load(c);
    McPolicy policy;
    policy.classify.n_iters = iters;
    policy.classify.drop = drop;
    policy.classify.lambda_threshold = threshold;
    policy.threads = threads;
    const ChaosProbabilityEstimate est =
        estimate_probability(rc.d, rc.l, trials, seed, policy, per_trial);
    write_estimate_json(c.out + ".json", est, rc.snapshot);
    if (per_trial) write_trials_csv(c.out + "_trials.csv", est, rc.snapshot);
    std::cout << "p_hat = " << est.p_hat << " (" << est.n_chaotic << "/" << est.n_trials
              << "), 95% CI [" << est.ci_low << ", " << est.ci_high << "]\n";
    return 0;
}

int cmd_soliton(const Common& c, double c0, double xi0, const std::string& xi_range) {
    const RunConfig rc = load(c);
    const SolitonConfig cfg = make_soliton_config(rc.d, rc.l, c0, xi0);
    double lo, hi;
    int n = 801;
    const auto first = xi_range.find(':');
    const auto second = xi_range.find(':', first + 1);
    if (second != std::string::npos) {
        parse_range(xi_range.substr(0, second), lo, hi);
        n = std::stoi(xi_range.substr(second + 1));
    } else {
        parse_range(xi_range, lo, hi);
    }
    const auto I = boundedness_I(cfg, default_cutoff(rc.d));
    const double scale = std::fabs(melnikov_eta(rc.l.k, rc.d.g1));
    if (std::fabs(I.first) > 1e-6 * scale)
        std::cerr << "[warn] c0 is not a Melnikov zero (I+ = " << I.first
                  << "); the first-order correction grows beyond the window\n";
    write_wave_csv(c.out + ".csv", wave_profile(cfg, lo, hi, n), rc.snapshot);
    std::cout << n << " samples written\n";
    return 0;
}

int cmd_control(const Common& c, int method, const std::string& gamma_new, double phi_new,
                bool experiment, std::uint64_t seed) {
    const RunConfig rc = load(c);
    const MelnikovProfile profile = count_zeros_per_period(rc.d, rc.l);
    const LatticeConfig after = method == 1
                                    ? apply_method1(rc.l, parse_gamma_flag(gamma_new))
                                    : apply_method2(rc.l, phi_new);
    const double tol = 1e-4 * profile.max_abs_m;
    std::vector<SuppressionReport> reports;
    reports.reserve(profile.zeros.size());
    for (const MelnikovZero& z : profile.zeros)
        reports.push_back(suppression_check(z.c0, rc.l, after, rc.d, tol));

    std::vector<SwitchingResult> experiments;
    if (experiment) {
        ClassifyPolicy policy; // defaults: 3000 iterates, drop 100
        // Seeded search for a chaotic initial condition under the before-config.
        std::optional<PhaseState> seed_state;
        for (std::uint64_t i = 0; i < 200 && !seed_state; ++i) {
            const PhaseState ic = sample_initial(i, seed);
            if (classify_trajectory(ic, rc.d, rc.l, policy).label == TrajectoryLabel::Chaotic)
                seed_state = ic;
        }
        if (!seed_state)
            throw std::domain_error("no chaotic seed found in 200 draws; cannot run experiment");
        ClassifyPolicy seg;
        seg.n_iters = policy.drop + 1000; // >= 1000 post-transient periods per segment
        seg.drop = policy.drop;
        const double xi_switch = seg.n_iters * stroboscopic_period(rc.l);
        experiments.push_back(
            switching_experiment(*seed_state, xi_switch, rc.l, after, rc.d, seg));
    }
    write_control_json(c.out + ".json", reports, experiments, rc.snapshot);
    int suppressed = 0;
    for (const auto& r : reports) suppressed += r.suppressed;
    std::cout << suppressed << "/" << reports.size() << " zeros suppressed\n";
    return 0;
}

}

int main(int argc, char** argv) {
    CLI::App app{"soliton-to-chaos analysis toolkit for a BEC in a moving optical superlattice"};
    app.set_version_flag("--version", solchaos::kVersion);
    app.require_subcommand(1);

    Common c_mel, c_map, c_poi, c_prob, c_sol, c_ctl;
    int c0_grid = 4096;
    auto* mel = app.add_subcommand("melnikov", "Melnikov profile, zeros and count per period");
    add_common(mel, c_mel);
    mel->add_option("--c0-grid", c0_grid, "samples per period");

    std::string k_range = "0.5:2.0", v2_range = "0.0:0.2", grid = "40x40";
    int map_threads = 0;
    auto* map = app.add_subcommand("region-map", "chaotic-region map over (k, V2)");
    add_common(map, c_map);
    map->add_option("--k-range", k_range, "k axis as lo:hi");
    map->add_option("--v2-range", v2_range, "V2 axis as lo:hi");
    map->add_option("--grid", grid, "grid size NKxNV");
    map->add_option("--threads", map_threads, "worker threads (0 = auto)");

    double R0 = 1.0, Rp0 = 0.0;
    int iters = 3000, drop = 100;
    auto* poi = app.add_subcommand("poincare", "stroboscopic Poincare section + classification");
    add_common(poi, c_poi);
    poi->add_option("--R0", R0, "initial R");
    poi->add_option("--Rp0", Rp0, "initial R'");
    poi->add_option("--iters", iters, "stroboscopic iterates");
    poi->add_option("--drop", drop, "transient iterates to discard");

    int trials = 500, p_iters = 3000, p_drop = 100, p_threads = 0;
    std::uint64_t seed = 1;
    double threshold = 0.01;
    bool per_trial = false;
    auto* prob = app.add_subcommand("probability", "Monte Carlo chaos-probability estimate");
    add_common(prob, c_prob);
    prob->add_option("--trials", trials, "number of random initial conditions");
    prob->add_option("--seed", seed, "master seed");
    prob->add_option("--iters", p_iters, "stroboscopic iterates per trial");
    prob->add_option("--drop", p_drop, "transient iterates to discard");
    prob->add_option("--threshold", threshold, "Lyapunov chaos threshold per xi-unit");
    prob->add_option("--threads", p_threads, "worker threads (0 = auto)");
    prob->add_flag("--per-trial", per_trial, "also write a per-trial CSV");

    double c0 = 0.0, xi0 = 0.0;
    std::string xi_range = "-10:10:801";
    auto* sol = app.add_subcommand("soliton", "chaotic-soliton wave profile");
    add_common(sol, c_sol);
    sol->add_option("--c0", c0, "integration constant c0");
    sol->add_option("--xi0", xi0, "initial phase xi0");
    sol->add_option("--xi-range", xi_range, "profile range lo:hi[:n]");

    int method = 1;
    std::string gamma_new = "sqrt2";
    double phi_new = solchaos::kPi / 4.0;
    bool experiment = false;
    std::uint64_t ctl_seed = 1;
    auto* ctl = app.add_subcommand("control", "chaos-suppression methods 1 and 2");
    add_common(ctl, c_ctl);
    ctl->add_option("--method", method, "1: gamma -> irrational, 2: phi -> nonzero")
        ->check(CLI::IsMember({1, 2}));
    ctl->add_option("--gamma-new", gamma_new, "replacement gamma for method 1");
    ctl->add_option("--phi-new", phi_new, "replacement phi for method 2");
    ctl->add_flag("--experiment", experiment, "run the switching experiment on a chaotic seed");
    ctl->add_option("--seed", ctl_seed, "seed for the chaotic-seed search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (mel->parsed()) return cmd_melnikov(c_mel, c0_grid);
        if (map->parsed()) return cmd_region_map(c_map, k_range, v2_range, grid, map_threads);
        if (poi->parsed()) return cmd_poincare(c_poi, R0, Rp0, iters, drop);
        if (prob->parsed())
            return cmd_probability(c_prob, trials, seed, p_iters, p_drop, threshold, p_threads,
                                   per_trial);
        if (sol->parsed()) return cmd_soliton(c_sol, c0, xi0, xi_range);
        if (ctl->parsed())
            return cmd_control(c_ctl, method, gamma_new, phi_new, experiment, ctl_seed);
    } catch (const solchaos::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const solchaos::NoPeriodError& e) {
        std::cerr << "analytic precondition: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << "analytic precondition: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "analytic precondition: " << e.what() << "\n";
        return 3;
    } catch (const solchaos::QuadratureError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 4;
    } catch (const solchaos::UnboundedError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
