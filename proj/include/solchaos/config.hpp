#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "solchaos/params.hpp"

namespace solchaos {

/** Parsed run configuration: the effective dimensionless parameters plus a
 *  serializable snapshot that every output file embeds.
 */
struct RunConfig {
    DimensionlessParams d;
    LatticeConfig l;
    std::optional<PhysicalParams> physical; // present when loaded from a physical block
    std::vector<std::string> warnings;
    nlohmann::ordered_json snapshot;
};

/** Parse a configuration document. Exactly one of the two sections must be
 *  present:
 *
 *    "physical":      SI inputs, converted on load (mass, omega_r, a_s, k0,
 *                     optional k_lattice, V1, V2 in J, gamma, phi, v_L, alpha, beta)
 *    "dimensionless": direct inputs, either {D, g1} or {v, alpha, beta, g1};
 *                     requires a "lattice" section {V1, V2, k, gamma, phi}
 *
 *  gamma accepts an integer, a [p, q] pair, a tag string ("sqrt2", "golden"),
 *  or {"irrational": <value>|<tag>}. A bare non-integer number is rejected as
 *  ambiguous. Throws ConfigError on any violation.
 */
RunConfig parse_config(const nlohmann::json& j);

/// Load and parse a JSON configuration file.
RunConfig load_config(const std::string& path);

/// gamma as a JSON value round-trippable through parse_config.
nlohmann::ordered_json gamma_to_json(const GammaRatio& g);

/// Parse the gamma forms accepted by configuration files and CLI overrides.
GammaRatio gamma_from_json(const nlohmann::json& j);

/// Effective-parameter snapshot (dimensionless + lattice) with stable key order.
nlohmann::ordered_json params_snapshot(const DimensionlessParams& d, const LatticeConfig& l);

}
