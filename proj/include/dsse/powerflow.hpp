#ifndef DSSE_POWERFLOW_HPP
#define DSSE_POWERFLOW_HPP

#include <string>
#include <vector>

#include "dsse/phasor.hpp"
#include "dsse/ybus.hpp"

namespace dsse {

/// Scaled (P kW, Q kvar) per load entry, aligned with FeederModel::loads
/// and each load's per_phase_pq order.
struct LoadSetpoint {
    std::vector<std::pair<double, double>> pq;
};

struct DgSetpoint {
    double p_kw = 0.0;
    double q_kvar = 0.0;
};

/// One operating point: a full set of load/DG injections.
struct Injections {
    std::vector<LoadSetpoint> loads; // size = model.loads.size()
    std::vector<DgSetpoint> dgs;     // size = model.dgs.size()
};

/// Injections at the nameplate values stored in the model.
Injections nominal_injections(const FeederModel& model);

struct BranchCurrent {
    std::string branch_id;
    Phase phase;
    Phasor current; // from -> to, per-unit
};

struct PowerFlowSolution {
    NodeIndexMap idx;
    std::vector<Phasor> voltages; // per energized node-phase, canonical order
    std::vector<BranchCurrent> branch_currents;
    bool converged = false;
    int iterations = 0;
    double max_mismatch = 0.0; // per-unit complex power

    const Phasor& voltage(const std::string& bus, Phase p) const {
        return voltages[idx.at(bus, p)];
    }
};

struct PowerFlowOptions {
    double tolerance = 1e-6; // pu power mismatch
    int max_iterations = 100;
};

/// Fixed-point current-injection solve on the full admittance matrix.
/// Constant-PQ wye loads enter as conjugate current injections; delta loads
/// as equivalent phase-pair injections; the source is held at its phasor.
PowerFlowSolution solve_power_flow(const FeederModel& model, const SwitchConfig& config,
                                   const Injections& inj,
                                   const PowerFlowOptions& opts = {});

/// Reusable per-topology solver: Y is assembled and factorized once, then
/// shared read-only across Monte-Carlo samples.
class PowerFlowEngine {
  public:
    PowerFlowEngine(const FeederModel& model, const SwitchConfig& config);

    PowerFlowSolution solve(const Injections& inj, const PowerFlowOptions& opts = {}) const;

    const YbusResult& ybus() const { return ybus_; }

  private:
    const FeederModel& model_;
    YbusResult ybus_;
    std::vector<std::size_t> slack_nodes_;
    std::vector<std::size_t> free_nodes_;
    Eigen::VectorXcd v_slack_;
    Eigen::MatrixXcd y_fs_; // free x slack block
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu_ff_;

    Eigen::VectorXcd injection_currents(const Eigen::VectorXcd& v, const Injections& inj) const;
    friend double injection_residual(const FeederModel&, const SwitchConfig&,
                                     const std::vector<Phasor>&, const Injections&);
};

/// Branch current phasors for a given voltage solution.
std::vector<BranchCurrent> branch_currents(const FeederModel& model, const SwitchConfig& config,
                                           const NodeIndexMap& idx,
                                           const std::vector<Phasor>& voltages);

/// Max node-phase complex-power mismatch (pu) of a candidate solution.
double injection_residual(const FeederModel& model, const SwitchConfig& config,
                          const std::vector<Phasor>& voltages, const Injections& inj);

} // namespace dsse

#endif
