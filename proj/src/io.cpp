#include "solchaos/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "solchaos/version.hpp"

namespace solchaos {

using nlohmann::ordered_json;

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    return out;
}

void write_comment(std::ofstream& out, const ordered_json& snapshot) {
    out << "# solchaos " << kVersion << " params=" << snapshot.dump() << "\n";
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* region_name(Region r) {
    switch (r) {
        case Region::A: return "A";
        case Region::B: return "B";
        case Region::Boundary: return "Boundary";
    }
    return "?";
}

void write_json_file(const std::string& path, const ordered_json& j) {
    auto out = open_out(path);
    out << j.dump(2) << "\n";
}

}

ordered_json report_header(const ordered_json& snapshot) {
    ordered_json j;
    j["version"] = kVersion;
    j["params"] = snapshot;
    return j;
}

void write_melnikov_csv(const std::string& path, const MelnikovProfile& profile,
                        const ordered_json& snapshot) {
    auto out = open_out(path);
    write_comment(out, snapshot);
    out << "c0,M\n";
    for (const auto& [c0, m] : profile.samples) out << num(c0) << "," << num(m) << "\n";
}

void write_melnikov_json(const std::string& path, const MelnikovProfile& profile,
                         const ordered_json& snapshot) {
    ordered_json j = report_header(snapshot);
    j["period"] = profile.period;
    j["n"] = profile.n();
    ordered_json zeros = ordered_json::array();
    ordered_json kinds = ordered_json::array();
    for (const MelnikovZero& z : profile.zeros) {
        zeros.push_back(z.c0);
        kinds.push_back(z.kind == ZeroKind::Tangential ? "tangential" : "simple");
    }
    j["zeros"] = zeros;
    j["kinds"] = kinds;
    j["max_abs_M"] = profile.max_abs_m;
    j["zero_tolerance"] = profile.zero_tolerance;
    write_json_file(path, j);
}

void write_region_map_csv(const std::string& path, const RegionMap& map,
                          const ordered_json& snapshot) {
    auto out = open_out(path);
    write_comment(out, snapshot);
    out << "k,V2,label,n,V2b\n";
    for (const RegionCell& cell : map.cells) {
        const std::string label = !cell.error.empty() ? "ERR"
                                  : cell.region ? region_name(*cell.region)
                                                : "NA";
        out << num(cell.k) << "," << num(cell.V2) << "," << label << "," << cell.n << ","
            << num(cell.v2b) << "\n";
    }
}

void write_poincare_csv(const std::string& path, const PoincareSection& section,
                        const ordered_json& snapshot) {
    auto out = open_out(path);
    write_comment(out, snapshot);
    out << "j,R,Rprime\n";
    int j = section.drop;
    for (const PhaseState& s : section.points)
        out << j++ << "," << num(s.R) << "," << num(s.Rp) << "\n";
}

void write_classification_json(const std::string& path, const TrajectoryClass& tc,
                               const ClassifyPolicy& policy, const ordered_json& snapshot) {
    ordered_json j = report_header(snapshot);
    j["label"] = to_string(tc.label);
    j["lambda"] = tc.lambda;
    j["n_iters"] = policy.n_iters;
    j["drop"] = policy.drop;
    j["threshold"] = policy.lambda_threshold;
    j["tail_variance"] = tc.tail_variance;
    j["renorm_count"] = tc.renorm_count;
    j["stationary"] = tc.stationary;
    write_json_file(path, j);
}

void write_estimate_json(const std::string& path, const ChaosProbabilityEstimate& est,
                         const ordered_json& snapshot) {
    ordered_json j = report_header(snapshot);
    j["n_trials"] = est.n_trials;
    j["n_chaotic"] = est.n_chaotic;
    j["n_regular"] = est.n_regular;
    j["n_unbounded"] = est.n_unbounded;
    j["p_hat"] = est.p_hat;
    j["ci"] = {est.ci_low, est.ci_high};
    j["seed"] = est.master_seed;
    ordered_json pol;
    pol["n_iters"] = est.policy.classify.n_iters;
    pol["drop"] = est.policy.classify.drop;
    pol["lambda_threshold"] = est.policy.classify.lambda_threshold;
    pol["rel_tol"] = est.policy.classify.step.rel_tol;
    pol["abs_tol"] = est.policy.classify.step.abs_tol;
    pol["escape_radius"] = est.policy.classify.step.escape_radius;
    pol["ic"] = {{"R", {est.policy.ic.R_lo, est.policy.ic.R_hi}},
                 {"Rprime", {est.policy.ic.Rp_lo, est.policy.ic.Rp_hi}}};
    pol["exclude_unbounded"] = est.policy.exclude_unbounded;
    j["policy"] = pol;
    write_json_file(path, j);
}

void write_trials_csv(const std::string& path, const ChaosProbabilityEstimate& est,
                      const ordered_json& snapshot) {
    auto out = open_out(path);
    write_comment(out, snapshot);
    out << "index,R0,Rp0,label,lambda\n";
    for (const TrialRecord& t : est.trials)
        out << t.index << "," << num(t.ic.R) << "," << num(t.ic.Rp) << "," << to_string(t.label)
            << "," << num(t.lambda) << "\n";
}

void write_wave_csv(const std::string& path, const std::vector<WaveSample>& samples,
                    const ordered_json& snapshot) {
    auto out = open_out(path);
    write_comment(out, snapshot);
    out << "xi,R0,R1,R,theta,psi_re,psi_im,perturb_ratio\n";
    for (const WaveSample& w : samples)
        out << num(w.xi) << "," << num(w.R0) << "," << num(w.R1) << "," << num(w.R) << ","
            << num(w.theta) << "," << num(w.psi_re) << "," << num(w.psi_im) << ","
            << num(w.perturb_ratio) << "\n";
}

void write_control_json(const std::string& path, const std::vector<SuppressionReport>& reports,
                        const std::vector<SwitchingResult>& experiments,
                        const ordered_json& snapshot) {
    ordered_json j = report_header(snapshot);
    ordered_json arr = ordered_json::array();
    for (const SuppressionReport& r : reports) {
        ordered_json e;
        e["c0"] = r.c0;
        e["M_before"] = r.M_before;
        e["M_after"] = r.M_after;
        e["suppressed"] = r.suppressed;
        arr.push_back(e);
    }
    j["suppression"] = arr;
    if (!experiments.empty()) {
        ordered_json ex = ordered_json::array();
        for (const SwitchingResult& s : experiments) {
            ordered_json e;
            e["xi_switch"] = s.xi_switch;
            e["lambda_before"] = s.lambda_before;
            e["lambda_after"] = s.lambda_after;
            ex.push_back(e);
        }
        j["experiments"] = ex;
    }
    write_json_file(path, j);
}

}
