#pragma once

#include "bridge/cable.hpp"
#include "bridge/dynamics.hpp"
#include "bridge/integrate.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bridge {

/// %.17g, round-trip exact for doubles and locale-independent.
std::string format_double(double v);

std::string cable_csv(const CableProfile& profile);
std::string basis_csv(const SpectralBasis& basis, Basis which);
std::string eigenvalues_json(const SpectralBasis& basis);
std::string trajectory_csv(const std::vector<ModalState>& snapshots);
std::string energy_csv(const std::vector<double>& times,
                       const std::vector<EnergyBreakdown>& energies);
std::string events_jsonl(const std::vector<SlackEvent>& events);
std::string force_compare_csv(const Grid& grid,
                              const Eigen::VectorXd& h_first_order,
                              const Eigen::VectorXd& h_timoshenko,
                              const Eigen::VectorXd& h_bvk);

/// FNV-1a hash of the canonical config serialization.
std::uint64_t fnv1a_hash(const std::string& text);

struct ManifestMetric {
    std::string key;
    double value = 0.0;
};

std::string manifest_json(std::uint64_t config_hash, const std::string& command,
                          const std::vector<ManifestMetric>& metrics,
                          const std::vector<std::string>& files);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

} // namespace bridge
