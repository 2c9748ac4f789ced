#ifndef DSSE_YBUS_HPP
#define DSSE_YBUS_HPP

#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dsse/feeder.hpp"

namespace dsse {

/// Canonical node-phase ordering: bus id sort, then phase a < b < c.
/// This single order governs every vector in the system.
struct NodeIndexMap {
    std::vector<std::pair<std::string, Phase>> nodes;
    std::map<std::pair<std::string, Phase>, std::size_t> index;

    std::size_t at(const std::string& bus, Phase p) const {
        auto it = index.find({bus, p});
        if (it == index.end())
            throw FeederError("node-phase (" + bus + "," + std::string(1, phase_char(p)) +
                              ") not energized");
        return it->second;
    }
    std::size_t size() const { return nodes.size(); }
};

NodeIndexMap build_node_index(const FeederModel& model, const TopologyView& view);

/// Per-unit branch admittance stamps. Branch current (from -> to, pu):
///   I_f = yff * V_f + yft * V_t
struct BranchStamp {
    std::string branch_id;
    std::vector<std::size_t> from_nodes; // node indices per branch phase
    std::vector<std::size_t> to_nodes;
    Eigen::MatrixXcd yff, yft, ytf, ytt;
};

BranchStamp stamp_branch(const FeederModel& model, const Branch& br, const NodeIndexMap& idx);

struct YbusResult {
    Eigen::MatrixXcd Y; // complex nodal admittance, per-unit
    NodeIndexMap idx;
    std::vector<BranchStamp> stamps; // active branches only, model order
};

/// Assemble the nodal admittance matrix over energized node-phases.
/// Includes capacitor shunts, transformer/regulator fixed taps, and closed
/// switches as low-impedance series branches.
YbusResult build_ybus(const FeederModel& model, const SwitchConfig& config);

} // namespace dsse

#endif
