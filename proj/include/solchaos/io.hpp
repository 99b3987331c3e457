#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "solchaos/control.hpp"
#include "solchaos/dynamics.hpp"
#include "solchaos/melnikov.hpp"
#include "solchaos/montecarlo.hpp"
#include "solchaos/soliton.hpp"

namespace solchaos {

/// CSV files are UTF-8, comma separated, '.' decimal; the first line is a
/// `# solchaos <version> params=<json>` comment, the second the header row.

void write_melnikov_csv(const std::string& path, const MelnikovProfile& profile,
                        const nlohmann::ordered_json& snapshot);
void write_melnikov_json(const std::string& path, const MelnikovProfile& profile,
                         const nlohmann::ordered_json& snapshot);

void write_region_map_csv(const std::string& path, const RegionMap& map,
                          const nlohmann::ordered_json& snapshot);

void write_poincare_csv(const std::string& path, const PoincareSection& section,
                        const nlohmann::ordered_json& snapshot);
void write_classification_json(const std::string& path, const TrajectoryClass& tc,
                               const ClassifyPolicy& policy,
                               const nlohmann::ordered_json& snapshot);

void write_estimate_json(const std::string& path, const ChaosProbabilityEstimate& est,
                         const nlohmann::ordered_json& snapshot);
void write_trials_csv(const std::string& path, const ChaosProbabilityEstimate& est,
                      const nlohmann::ordered_json& snapshot);

void write_wave_csv(const std::string& path, const std::vector<WaveSample>& samples,
                    const nlohmann::ordered_json& snapshot);

void write_control_json(const std::string& path, const std::vector<SuppressionReport>& reports,
                        const std::vector<SwitchingResult>& experiments,
                        const nlohmann::ordered_json& snapshot);

/// JSON skeleton {version, params} shared by every report.
nlohmann::ordered_json report_header(const nlohmann::ordered_json& snapshot);

}
