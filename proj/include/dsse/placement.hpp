#ifndef DSSE_PLACEMENT_HPP
#define DSSE_PLACEMENT_HPP

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dsse/feeder.hpp"
#include "dsse/loadmodel.hpp"
#include "dsse/ybus.hpp"

namespace dsse {

/// An SMD at bus i monitoring branch i-j: up to three nodal voltage
/// phasors at i and three current phasors flowing from i into the branch.
struct SmdLocation {
    std::string bus;
    std::string branch;
};

/// Display id "i-j": monitored bus, then the branch's other endpoint.
std::string location_id(const FeederModel& model, const SmdLocation& loc);

enum class PlacementPurpose { Ti, Dsse, Both };

struct PlacementStep {
    std::string location_id;
    PlacementPurpose purpose;
    double evidence; // SFS validation accuracy, or POI for cluster additions
};

struct PlacementPlan {
    std::vector<SmdLocation> locations;
    std::vector<PlacementPurpose> purposes; // aligned with locations
    std::vector<PlacementStep> trace;
    bool alpha_reached = true; // false when SFS hit the budget first
};

/// One physical SMD channel in the canonical measurement ordering:
/// locations in plan order, voltages (phase-sorted) then currents.
struct Channel {
    std::string location_id;
    bool is_voltage;
    std::string bus;    // monitored bus (voltage) or from-bus (current)
    std::string branch; // current channels only
    Phase phase;

    std::string name() const;
};

std::vector<Channel> plan_channels(const FeederModel& model, const PlacementPlan& plan);

/// Candidate set: every (bus, incident branch) pair with >= 1 phase, minus
/// transformer/regulator internals; sorted by location id.
std::vector<SmdLocation> candidate_locations(const FeederModel& model);

/// Phase observability index: own bus phases + branch-neighbor phases
/// recoverable through the measured currents.
std::size_t poi(const FeederModel& model, const SmdLocation& loc);

struct SfsConfig {
    double alpha_pct = 97.0;      // target TI accuracy
    std::size_t budget = 8;       // max SMDs
    std::size_t samples_per_topology = 40;
    double validation_fraction = 0.3;
    std::uint64_t seed = 0;
    SamplerConfig sampler;
};

/// Sequential forward selection over candidate locations for TI: greedily
/// adds the block of noiseless simulated current features that maximizes
/// validation accuracy of a linear one-vs-rest max-margin classifier.
PlacementPlan sfs_ti(const FeederModel& model, const TopologyCatalog& catalog,
                     const std::map<std::string, LoadPdf>& pdfs,
                     const std::vector<SmdLocation>& candidates, const SfsConfig& cfg);

/// Voltage-magnitude samples over Monte-Carlo scenarios on one topology:
/// rows = node-phases (canonical order), cols = scenarios.
Eigen::MatrixXd collect_voltage_samples(const FeederModel& model, const SwitchConfig& config,
                                        const std::map<std::string, LoadPdf>& pdfs,
                                        const SamplerConfig& sampler, std::size_t n,
                                        NodeIndexMap* idx_out = nullptr);

/// Pairwise Spearman rank correlation of node-phase voltage magnitudes.
Eigen::MatrixXd spearman_matrix(const Eigen::MatrixXd& samples);

struct VoltageClusters {
    std::vector<std::vector<std::size_t>> node_phase_clusters; // indices into idx
    std::vector<std::vector<std::string>> node_clusters;       // bus ids, majority vote
};

/// Agglomerative complete-linkage clustering on distance 1 - rho, cut at tau.
VoltageClusters cluster_voltages(const Eigen::MatrixXd& rho, const NodeIndexMap& idx,
                                 double tau = 0.05);

struct IntegratedPlacementConfig {
    SfsConfig sfs;
    double tau = 0.05;
    std::size_t spearman_samples = 200;
    SamplerConfig sampler;
};

/// TI placement first (skipped when the model has no switches), then one
/// max-POI SMD in every Spearman cluster not already voltage-monitored.
PlacementPlan integrated_placement(const FeederModel& model, const TopologyCatalog& catalog,
                                   const std::map<std::string, LoadPdf>& pdfs,
                                   const IntegratedPlacementConfig& cfg);

std::string serialize_plan(const PlacementPlan& plan);
PlacementPlan parse_plan(const std::string& text, const FeederModel& model);

} // namespace dsse

#endif
