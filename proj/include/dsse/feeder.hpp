#ifndef DSSE_FEEDER_HPP
#define DSSE_FEEDER_HPP

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dsse/phasor.hpp"

namespace dsse {

/// Raised for any feeder-file schema or cross-reference violation.
/// what() carries the offending element id and field path.
class FeederError : public std::runtime_error {
  public:
    explicit FeederError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class Phase : int { A = 0, B = 1, C = 2 };

inline char phase_char(Phase p) { return "abc"[static_cast<int>(p)]; }

/// Ordered phase subset, e.g. "abc", "b", "ac".
using PhaseSet = std::vector<Phase>;

PhaseSet parse_phases(const std::string& s, const std::string& context);
std::string phases_to_string(const PhaseSet& ps);

struct Bus {
    std::string id;
    PhaseSet phases;
    double base_kv = 0.0; // line-to-line kV
};

enum class BranchKind { Line, Transformer, Regulator, Switch };

struct Branch {
    std::string id;
    std::string from_bus;
    std::string to_bus;
    PhaseSet phases;
    Eigen::MatrixXcd series_impedance; // ohms, |phases| x |phases|, symmetric
    Eigen::MatrixXcd shunt_admittance; // siemens, total (half stamped per end); may be 0x0
    BranchKind kind = BranchKind::Line;
    std::vector<double> taps; // per-phase off-nominal ratio, transformer/regulator only
};

enum class Connection { Wye, Delta };

struct LoadEntry {
    std::string phase; // "a".."c" for wye, "ab"/"bc"/"ca" for delta
    double p_kw = 0.0;
    double q_kvar = 0.0;
};

struct Load {
    std::string bus;
    Connection connection = Connection::Wye;
    std::vector<LoadEntry> per_phase_pq;
    std::string meter_group; // empty = unmetered
};

struct Dg {
    std::string bus;
    double rating_kw = 0.0;
    PhaseSet phases;
};

struct Capacitor {
    std::string bus;
    PhaseSet phases;
    std::vector<double> q_kvar; // per phase, at nominal voltage
};

struct Source {
    std::string bus;
    double voltage_pu = 1.0;
    double angle_deg = 0.0; // phase-a reference
};

struct FeederModel {
    std::vector<Bus> buses;
    std::vector<Branch> branches;
    std::vector<Load> loads;
    std::vector<Dg> dgs;
    std::vector<Capacitor> capacitors;
    Source source;
    std::vector<std::string> switch_ids; // ordered, all kind==Switch
    double base_kva = 1000.0;

    const Bus& bus(const std::string& id) const;
    const Branch& branch(const std::string& id) const;
    std::size_t bus_index(const std::string& id) const;

    /// Content fingerprint over the canonical serialized form.
    std::string fingerprint() const;
};

/// Boolean switch-status vector aligned with FeederModel::switch_ids
/// (true = closed). Together with the model it defines one topology.
struct SwitchConfig {
    std::vector<bool> statuses;

    bool operator==(const SwitchConfig&) const = default;
    std::string to_string() const;
};

struct TopologyCatalog {
    std::vector<SwitchConfig> configs; // index = TI class label
};

/// Energized subgraph after applying a switch configuration.
struct TopologyView {
    std::vector<std::string> energized_buses;   // sorted by id
    std::vector<std::string> active_branches;   // non-switch + closed switches
    std::vector<bool> bus_energized;            // aligned with model.buses order
};

FeederModel parse_feeder(const std::string& text);
std::string serialize_feeder(const FeederModel& model);

bool check_connectivity(const FeederModel& model, const SwitchConfig& config);
TopologyCatalog enumerate_feasible_topologies(const FeederModel& model,
                                              bool require_radial = false);
TopologyView apply_switch_config(const FeederModel& model, const SwitchConfig& config);

/// Closed switches are stamped with this per-phase series impedance (ohms)
/// so that switch currents remain measurable channels.
inline constexpr double kClosedSwitchOhms = 1e-4;

} // namespace dsse

#endif
