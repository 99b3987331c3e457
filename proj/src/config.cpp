#include "solchaos/config.hpp"

#include <cmath>
#include <fstream>

#include "solchaos/errors.hpp"

namespace solchaos {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

double require_number(const json& j, const char* section, const char* key) {
    if (!j.contains(key))
        throw ConfigError(std::string(section) + " section is missing \"" + key + "\"");
    if (!j.at(key).is_number())
        throw ConfigError(std::string(section) + "." + key + " must be a number");
    return j.at(key).get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number())
        throw ConfigError(std::string(key) + " must be a number");
    return j.at(key).get<double>();
}

GammaRatio gamma_from_tag(const std::string& tag) {
    if (tag == "sqrt2") return GammaRatio::sqrt2();
    if (tag == "golden") return GammaRatio::golden();
    throw ConfigError("unknown gamma tag \"" + tag + "\" (use \"sqrt2\" or \"golden\")");
}

}

GammaRatio gamma_from_json(const json& j) {
    try {
        if (j.is_number_integer())
            return GammaRatio::from_integer(j.get<int>());
        if (j.is_number_float()) {
            const double v = j.get<double>();
            if (v == std::floor(v) && v > 0 && v < 1e9)
                return GammaRatio::from_integer(static_cast<int>(v));
            throw ConfigError(
                "a bare non-integer gamma is ambiguous; use [p, q] for a rational value "
                "or {\"irrational\": <value>} / a tag string for an irrational one");
        }
        if (j.is_string())
            return gamma_from_tag(j.get<std::string>());
        if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer())
            return GammaRatio::from_fraction(j[0].get<int>(), j[1].get<int>());
        if (j.is_object() && j.contains("irrational")) {
            const json& g = j.at("irrational");
            if (g.is_string()) return gamma_from_tag(g.get<std::string>());
            if (g.is_number()) return GammaRatio::irrational(g.get<double>());
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid gamma: ") + e.what());
    }
    throw ConfigError("unrecognized gamma value " + j.dump());
}

ordered_json gamma_to_json(const GammaRatio& g) {
    ordered_json j;
    j["value"] = g.value;
    j["rational"] = g.rational;
    if (g.rational) {
        j["p"] = g.p;
        j["q"] = g.q;
    } else if (!g.tag.empty()) {
        j["tag"] = g.tag;
    }
    return j;
}

ordered_json params_snapshot(const DimensionlessParams& d, const LatticeConfig& l) {
    ordered_json j;
    j["dimensionless"] = {{"D", d.D}, {"g1", d.g1}, {"v", d.v},
                          {"alpha", d.alpha}, {"beta", d.beta}, {"C", d.C}};
    ordered_json lat;
    lat["V1"] = l.V1;
    lat["V2"] = l.V2;
    lat["k"] = l.k;
    lat["gamma"] = gamma_to_json(l.gamma);
    lat["phi"] = l.phi;
    j["lattice"] = lat;
    return j;
}

RunConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("configuration root must be a JSON object");
    const bool has_phys = j.contains("physical");
    const bool has_dim = j.contains("dimensionless");
    if (has_phys && has_dim)
        throw ConfigError("provide either a physical or a dimensionless section, not both");
    if (!has_phys && !has_dim)
        throw ConfigError("configuration needs a physical or a dimensionless section");

    RunConfig rc;
    try {
        if (has_phys) {
            const json& p = j.at("physical");
            PhysicalParams phys;
            phys.mass = require_number(p, "physical", "mass");
            phys.omega_r = require_number(p, "physical", "omega_r");
            phys.a_s = require_number(p, "physical", "a_s");
            phys.k0 = require_number(p, "physical", "k0");
            phys.k_lattice = number_or(p, "k_lattice", 0.0);
            phys.V1 = require_number(p, "physical", "V1");
            phys.V2 = require_number(p, "physical", "V2");
            phys.gamma = p.contains("gamma") ? gamma_from_json(p.at("gamma"))
                                             : GammaRatio::from_integer(2);
            phys.phi = number_or(p, "phi", 0.0);
            phys.v_L = number_or(p, "v_L", 0.0);
            phys.alpha = number_or(p, "alpha", 0.0);
            phys.beta = number_or(p, "beta", 0.0);
            ReducedParams reduced = reduce_to_dimensionless(phys);
            rc.d = reduced.d;
            rc.l = reduced.l;
            rc.warnings = std::move(reduced.warnings);
            rc.physical = phys;
        } else {
            const json& dd = j.at("dimensionless");
            const double g1 = require_number(dd, "dimensionless", "g1");
            if (dd.contains("D")) {
                if (dd.contains("v") || dd.contains("alpha") || dd.contains("beta"))
                    throw ConfigError(
                        "dimensionless section takes either D or (v, alpha, beta), not both");
                rc.d = DimensionlessParams::from_D(require_number(dd, "dimensionless", "D"), g1);
            } else {
                rc.d = DimensionlessParams::from_ansatz(
                    require_number(dd, "dimensionless", "v"),
                    require_number(dd, "dimensionless", "alpha"),
                    require_number(dd, "dimensionless", "beta"), g1);
            }
            if (number_or(dd, "C", 0.0) != 0.0)
                throw ConfigError("the C != 0 branch is out of scope; C must be 0");
            if (!j.contains("lattice"))
                throw ConfigError("dimensionless input requires a lattice section");
            const json& lat = j.at("lattice");
            rc.l = make_lattice(require_number(lat, "lattice", "V1"),
                                require_number(lat, "lattice", "V2"),
                                require_number(lat, "lattice", "k"),
                                lat.contains("gamma") ? gamma_from_json(lat.at("gamma"))
                                                      : GammaRatio::from_integer(2),
                                number_or(lat, "phi", 0.0));
            if (rc.d.D >= 0.0) rc.warnings.push_back("D >= 0: outside the soliton/chaos regime");
            if (rc.d.g1 >= 0.0) rc.warnings.push_back("g1 >= 0: outside the soliton regime");
        }
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    rc.snapshot = params_snapshot(rc.d, rc.l);
    return rc;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config parse error in " + path + ": " + e.what());
    }
    return parse_config(j);
}

}
