#ifndef DSSE_LSE_HPP
#define DSSE_LSE_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dsse/placement.hpp"
#include "dsse/powerflow.hpp"

namespace dsse {

/// Row descriptor: channel index into the plan's channel list, 0 = real
/// axis, 1 = imaginary axis.
struct MeasurementRow {
    std::size_t channel;
    int axis;
};

/// z = H x in rectangular coordinates: 2 rows per measured phasor,
/// 2 columns (Re V, Im V) per node-phase.
struct LinearMeasurementModel {
    Eigen::MatrixXd H;
    Eigen::VectorXd weights; // diagonal of W, positive
    std::vector<Channel> channels;
    std::vector<MeasurementRow> rows;
    NodeIndexMap idx;
};

LinearMeasurementModel build_h(const FeederModel& model, const SwitchConfig& config,
                               const PlacementPlan& plan);

struct ObservabilityReport {
    bool observable = false;
    Eigen::Index rank = 0;
    Eigen::Index deficiency = 0;
    std::vector<std::size_t> suspect_columns; // largest null-space participation
};

ObservabilityReport observability_check(const Eigen::MatrixXd& H, double rel_threshold = 1e-8);

/// Iteratively add the SMD location whose channels raise numeric rank the
/// most, until observable; deterministic tie-break by location id.
PlacementPlan greedy_observability_placement(const FeederModel& model, const SwitchConfig& config);

/// Rectangular measurement vector for the plan's channel ordering.
Eigen::VectorXd measurements_rect(const LinearMeasurementModel& lm,
                                  const std::vector<Phasor>& channel_phasors);

/// Per-row inverse-variance weights for a Gaussian TVE of the given limit,
/// sigma per axis = tve_limit * |z| / (3 sqrt 2).
Eigen::VectorXd weights_from_tve(const LinearMeasurementModel& lm,
                                 const std::vector<Phasor>& channel_phasors, double tve_limit);

struct WlsSolution {
    Eigen::VectorXd x_rect;        // 2 per node-phase (Re, Im)
    Eigen::MatrixXd state;         // (2 per node-phase) x 1: mag pu, angle deg
    double residual_norm = 0.0;
};

WlsSolution solve_wls(const LinearMeasurementModel& lm, const Eigen::VectorXd& weights,
                      const Eigen::VectorXd& z);

/// Extract the plan's channel phasors from a power-flow solution.
std::vector<Phasor> channel_truth(const FeederModel& model, const PlacementPlan& plan,
                                  const PowerFlowSolution& sol);

} // namespace dsse

#endif
