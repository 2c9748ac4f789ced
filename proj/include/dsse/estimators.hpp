#ifndef DSSE_ESTIMATORS_HPP
#define DSSE_ESTIMATORS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dsse/loadmodel.hpp"
#include "dsse/measerror.hpp"
#include "dsse/metrics.hpp"
#include "dsse/mlp.hpp"
#include "dsse/placement.hpp"
#include "dsse/powerflow.hpp"

namespace dsse {

/// Worker threads for dataset generation and scenario replay (0 = one per
/// hardware thread). Results are identical for any worker count.
void set_parallel_workers(std::size_t n);

enum class DatasetKind { Dsse, Ti };

struct DatasetConfig {
    DatasetKind kind = DatasetKind::Dsse;
    std::size_t rows = 12500; // dsse: total rows; ti: rows per topology
    std::uint64_t seed = 0;
    ErrorModelConfig error_cfg;
    SamplerConfig sampler;
    std::size_t dsse_config_index = 0; // catalog index of the dsse base topology
    bool ti_all_channels = false;      // default: current channels only
    std::size_t max_resample_attempts = 50;
};

/// Feature rows are column-aligned with `feature_names`; SMD channels are
/// ordered by location id, magnitude before angle per phasor. TI datasets
/// append one 0/1 validity flag per channel (a channel de-energized under
/// the sampled topology reads as zero magnitude/angle with flag 0).
struct Dataset {
    DatasetKind kind = DatasetKind::Dsse;
    Eigen::MatrixXd X; // features x rows
    Eigen::MatrixXd Y; // dsse: state x rows; ti: one-hot classes x rows
    std::vector<int> labels; // ti: class index per row
    std::vector<std::string> feature_names;
    std::vector<std::string> output_names; // dsse node-phase names / ti class names
    std::vector<std::string> label_map;    // ti: switch-status string per class
    std::string feeder_fingerprint;
    PlacementPlan plan;
    DatasetConfig cfg;
    std::size_t resampled_rows = 0; // non-converged power flows replaced

    std::size_t rows() const { return static_cast<std::size_t>(X.cols()); }
};

Dataset build_dataset(const FeederModel& model, const TopologyCatalog& catalog,
                      const std::map<std::string, LoadPdf>& pdfs, const PlacementPlan& plan,
                      const DatasetConfig& cfg);

std::string dataset_manifest(const Dataset& ds);
/// Writes a tab-delimited table at `path` plus `<path>.manifest.json`.
void save_dataset(const Dataset& ds, const std::string& path, const FeederModel& model);
Dataset load_dataset(const std::string& path, const FeederModel& model);

struct DnnConfig {
    std::size_t hidden_layers = 5;
    std::size_t hidden_width = 500;
    TrainConfig train;
};

DnnConfig dsse_default_config(); // 5 x 500, linear head, 200 epochs, MSE
DnnConfig ti_default_config();   // 5 x 800, softmax head, 50 epochs, cross-entropy

struct TrainedModel {
    MlpParams params;
    TrainHistory history;
    double wall_clock_s = 0.0;
    // classification only, on a seeded held-out split: overall and per class
    double holdout_accuracy_pct = -1.0;
    std::vector<double> per_class_accuracy_pct;
};

TrainedModel train_dsse(const Dataset& ds, const DnnConfig& cfg);
TrainedModel train_ti(const Dataset& ds, const DnnConfig& cfg);

/// De-standardized (pu, degrees) predictions; columns = samples. Throws on
/// fingerprint or width mismatch against the checkpoint metadata.
Eigen::MatrixXd estimate_states(const MlpParams& params, const Eigen::MatrixXd& Z,
                                const std::string& feeder_fingerprint);

struct TopologyDecision {
    std::size_t class_index = 0;
    Eigen::VectorXd posterior; // softmax over catalog classes
};

/// Argmax class with ties broken toward the lowest index.
TopologyDecision identify_topology(const MlpParams& params, const Eigen::VectorXd& z,
                                   const std::string& feeder_fingerprint);

/// Retrain all layers starting from the given weights on the new dataset.
/// Input scalers stay frozen; output scalers are refit on the new data.
/// The caller keeps `base` for rollback.
MlpParams fine_tune(const MlpParams& base, const Dataset& new_ds, const TrainConfig& cfg);

TrainConfig fine_tune_default_config(); // 10 epochs, lr 1e-3, no dropout

struct ScenarioConfig {
    std::vector<std::size_t> script; // topology class indices, step order
    std::size_t snapshots_per_step = 100;
    std::size_t finetune_rows = 1000;
    TrainConfig finetune_train = fine_tune_default_config();
    ErrorModelConfig error_cfg;
    SamplerConfig sampler;
    std::uint64_t seed = 0;
};

struct ScenarioStep {
    std::size_t true_topology = 0;
    std::size_t identified_topology = 0;
    double ti_accuracy_pct = 0.0; // over the step's snapshots
    bool misidentified = false;
    bool fine_tuned = false;
    double mae_tracked_deg = 0.0; // model with fine-tuning on change
    double mae_frozen_deg = 0.0;  // initial model, never updated
    double mape_tracked_pct = 0.0;
    double mape_frozen_pct = 0.0;
    double identify_time_s = 0.0;
    double finetune_time_s = 0.0;
};

struct ScenarioResult {
    std::vector<ScenarioStep> steps;
    std::size_t finetune_count = 0;
};

/// Sequential replay: per step, draw live snapshots on the true topology,
/// identify the topology per snapshot (majority decision), fine-tune the
/// tracked regressor and swap the base when the decision changes, and score
/// both the tracked and the frozen regressor on the snapshots. A wrong
/// majority decision still fine-tunes (on data from the wrong topology) and
/// is flagged, not fatal.
ScenarioResult run_scenario(const FeederModel& model, const TopologyCatalog& catalog,
                            const std::map<std::string, LoadPdf>& pdfs,
                            const PlacementPlan& plan, const TrainedModel& dsse_model,
                            const TrainedModel& ti_model, const ScenarioConfig& cfg);

} // namespace dsse

#endif
