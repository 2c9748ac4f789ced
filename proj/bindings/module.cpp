// Python bindings for the distribution-system state estimation toolkit.
// Exposes the main pipeline operations: feeder parsing, topology
// enumeration, power flow, load-model fitting/sampling, SMD placement,
// dataset generation, network training, estimation, and metrics.
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dsse/estimators.hpp"
#include "dsse/lse.hpp"
#include "dsse/metrics.hpp"
#include "dsse/placement.hpp"
#include "dsse/powerflow.hpp"
#include "dsse/stats.hpp"

namespace py = pybind11;
using namespace dsse;

namespace {

ErrorMode mode_from_string(const std::string& s) {
    if (s == "none") return ErrorMode::None;
    if (s == "tve_only") return ErrorMode::GaussianTveOnly;
    if (s == "two_level") return ErrorMode::TwoLevel;
    throw std::invalid_argument("unknown error mode: " + s);
}

DnnConfig make_dnn_config(std::size_t hidden_layers, std::size_t hidden_width,
                          std::size_t epochs, std::size_t batch_size, double lr, double dropout,
                          std::uint64_t seed, bool classifier) {
    DnnConfig cfg = classifier ? ti_default_config() : dsse_default_config();
    cfg.hidden_layers = hidden_layers;
    cfg.hidden_width = hidden_width;
    cfg.train.epochs = epochs;
    cfg.train.batch_size = batch_size;
    cfg.train.lr_init = lr;
    cfg.train.dropout_rate = dropout;
    cfg.train.seed = seed;
    return cfg;
}

} // namespace

PYBIND11_MODULE(dsse, m) {
    m.doc() = "Topology identification and DNN-based state estimation for "
              "unbalanced three-phase distribution feeders";

    py::class_<FeederModel>(m, "Feeder")
        .def_static("parse", &parse_feeder, py::arg("text"),
                    "Parse and validate a feeder JSON document")
        .def("serialize", &serialize_feeder)
        .def("fingerprint", &FeederModel::fingerprint)
        .def_property_readonly("bus_ids",
                               [](const FeederModel& f) {
                                   std::vector<std::string> ids;
                                   for (const auto& b : f.buses) ids.push_back(b.id);
                                   return ids;
                               })
        .def_readonly("switch_ids", &FeederModel::switch_ids);

    m.def(
        "enumerate_topologies",
        [](const FeederModel& f, bool radial) {
            std::vector<std::string> out;
            for (const auto& c : enumerate_feasible_topologies(f, radial).configs)
                out.push_back(c.to_string());
            return out;
        },
        py::arg("feeder"), py::arg("radial") = false,
        "Feasible switch configurations as 0/1 status strings (index = class label)");

    m.def(
        "solve_power_flow",
        [](const FeederModel& f, const std::string& statuses, double tolerance,
           int max_iterations) {
            SwitchConfig cfg;
            for (char c : statuses) cfg.statuses.push_back(c == '1');
            PowerFlowOptions opts;
            opts.tolerance = tolerance;
            opts.max_iterations = max_iterations;
            const PowerFlowSolution sol =
                solve_power_flow(f, cfg, nominal_injections(f), opts);
            std::vector<std::string> nodes;
            Eigen::VectorXd mag(long(sol.voltages.size())), ang(long(sol.voltages.size()));
            for (std::size_t i = 0; i < sol.voltages.size(); ++i) {
                nodes.push_back(sol.idx.nodes[i].first + ":" +
                                phases_to_string({sol.idx.nodes[i].second}));
                mag(long(i)) = sol.voltages[i].magnitude;
                ang(long(i)) = sol.voltages[i].angle_deg;
            }
            py::dict d;
            d["converged"] = sol.converged;
            d["iterations"] = sol.iterations;
            d["max_mismatch"] = sol.max_mismatch;
            d["nodes"] = nodes;
            d["magnitude_pu"] = mag;
            d["angle_deg"] = ang;
            return d;
        },
        py::arg("feeder"), py::arg("statuses") = std::string(), py::arg("tolerance") = 1e-6,
        py::arg("max_iterations") = 100,
        "Three-phase power flow at nominal injections; statuses = closed-switch bits");

    py::class_<LoadPdf>(m, "LoadPdf")
        .def_readonly("group", &LoadPdf::group)
        .def_readonly("bandwidth", &LoadPdf::bandwidth)
        .def("pdf", &LoadPdf::pdf)
        .def("cdf", &LoadPdf::cdf)
        .def("quantile", &LoadPdf::quantile);

    m.def(
        "fit_load_models",
        [](const std::string& meter_csv, double target_coverage, std::uint64_t seed) {
            const auto groups = aggregate_to_transformer(parse_smart_meter_csv(meter_csv));
            std::map<std::string, LoadPdf> out;
            std::uint64_t k = 0;
            for (const auto& [g, vals] : groups)
                out[g] = fit_kde(vals, target_coverage, derive_seed(seed, k++), g);
            return out;
        },
        py::arg("meter_csv"), py::arg("target_coverage") = 0.95, py::arg("seed") = 0,
        "Kernel-density load models per transformer group from a smart-meter CSV");

    py::class_<PlacementPlan>(m, "PlacementPlan")
        .def("serialize", &serialize_plan)
        .def_static("parse", &parse_plan, py::arg("text"), py::arg("feeder"))
        .def_property_readonly("size",
                               [](const PlacementPlan& p) { return p.locations.size(); })
        .def_readonly("alpha_reached", &PlacementPlan::alpha_reached)
        .def("location_ids", [](const PlacementPlan& p, const FeederModel& f) {
            std::vector<std::string> ids;
            for (const auto& loc : p.locations) ids.push_back(location_id(f, loc));
            return ids;
        });

    m.def(
        "integrated_placement",
        [](const FeederModel& f, const std::map<std::string, LoadPdf>& pdfs, double tau,
           double alpha_pct, std::size_t budget, std::size_t samples_per_topology,
           std::size_t spearman_samples, std::uint64_t seed) {
            IntegratedPlacementConfig cfg;
            cfg.tau = tau;
            cfg.spearman_samples = spearman_samples;
            cfg.sampler.master_seed = seed;
            cfg.sfs.alpha_pct = alpha_pct;
            cfg.sfs.budget = budget;
            cfg.sfs.samples_per_topology = samples_per_topology;
            cfg.sfs.seed = seed;
            cfg.sfs.sampler.master_seed = derive_seed(seed, 1);
            return integrated_placement(f, enumerate_feasible_topologies(f), pdfs, cfg);
        },
        py::arg("feeder"), py::arg("pdfs"), py::arg("tau") = 0.05, py::arg("alpha_pct") = 97.0,
        py::arg("budget") = 8, py::arg("samples_per_topology") = 40,
        py::arg("spearman_samples") = 200, py::arg("seed") = 0,
        "Sequential TI selection plus voltage-cluster coverage placement");

    py::class_<Dataset>(m, "Dataset")
        .def_property_readonly("X", [](const Dataset& d) { return d.X; })
        .def_property_readonly("Y", [](const Dataset& d) { return d.Y; })
        .def_readonly("feature_names", &Dataset::feature_names)
        .def_readonly("output_names", &Dataset::output_names)
        .def_readonly("label_map", &Dataset::label_map)
        .def_readonly("labels", &Dataset::labels)
        .def_property_readonly("rows", &Dataset::rows)
        .def("save", [](const Dataset& d, const std::string& path,
                        const FeederModel& f) { save_dataset(d, path, f); })
        .def_static("load", &load_dataset, py::arg("path"), py::arg("feeder"));

    m.def(
        "build_dataset",
        [](const FeederModel& f, const std::map<std::string, LoadPdf>& pdfs,
           const PlacementPlan& plan, const std::string& kind, std::size_t rows,
           std::uint64_t seed, const std::string& error_mode, double tve_limit,
           std::size_t base_index) {
            DatasetConfig cfg;
            cfg.kind = kind == "ti" ? DatasetKind::Ti : DatasetKind::Dsse;
            cfg.rows = rows;
            cfg.seed = seed;
            cfg.sampler.master_seed = derive_seed(seed, 9000);
            cfg.error_cfg.mode = mode_from_string(error_mode);
            cfg.error_cfg.tve.tve_limit = tve_limit;
            cfg.dsse_config_index = base_index;
            return build_dataset(f, enumerate_feasible_topologies(f), pdfs, plan, cfg);
        },
        py::arg("feeder"), py::arg("pdfs"), py::arg("plan"), py::arg("kind"), py::arg("rows"),
        py::arg("seed") = 0, py::arg("error_mode") = "two_level", py::arg("tve_limit") = 0.01,
        py::arg("base_index") = 0,
        "Monte-Carlo measurement/state (dsse) or measurement/class (ti) dataset");

    py::class_<TrainedModel>(m, "TrainedModel")
        .def_readonly("wall_clock_s", &TrainedModel::wall_clock_s)
        .def_readonly("holdout_accuracy_pct", &TrainedModel::holdout_accuracy_pct)
        .def_readonly("per_class_accuracy_pct", &TrainedModel::per_class_accuracy_pct)
        .def("checkpoint", [](const TrainedModel& t) { return save_checkpoint(t.params); });

    m.def(
        "train_dsse",
        [](const Dataset& ds, std::size_t hidden_layers, std::size_t hidden_width,
           std::size_t epochs, std::size_t batch_size, double lr, double dropout,
           std::uint64_t seed) {
            return train_dsse(ds, make_dnn_config(hidden_layers, hidden_width, epochs,
                                                  batch_size, lr, dropout, seed, false));
        },
        py::arg("dataset"), py::arg("hidden_layers") = 5, py::arg("hidden_width") = 500,
        py::arg("epochs") = 200, py::arg("batch_size") = 32, py::arg("lr") = 0.01,
        py::arg("dropout") = 0.05, py::arg("seed") = 0);

    m.def(
        "train_ti",
        [](const Dataset& ds, std::size_t hidden_layers, std::size_t hidden_width,
           std::size_t epochs, std::size_t batch_size, double lr, double dropout,
           std::uint64_t seed) {
            return train_ti(ds, make_dnn_config(hidden_layers, hidden_width, epochs, batch_size,
                                                lr, dropout, seed, true));
        },
        py::arg("dataset"), py::arg("hidden_layers") = 5, py::arg("hidden_width") = 800,
        py::arg("epochs") = 50, py::arg("batch_size") = 32, py::arg("lr") = 0.01,
        py::arg("dropout") = 0.05, py::arg("seed") = 0);

    m.def(
        "estimate_states",
        [](const std::string& checkpoint, const Eigen::MatrixXd& Z,
           const std::string& fingerprint) {
            return estimate_states(load_checkpoint(checkpoint), Z, fingerprint);
        },
        py::arg("checkpoint"), py::arg("Z"), py::arg("fingerprint"),
        "De-standardized state predictions (magnitude pu / angle deg rows, sample columns)");

    m.def(
        "identify_topology",
        [](const std::string& checkpoint, const Eigen::VectorXd& z,
           const std::string& fingerprint) {
            const TopologyDecision d = identify_topology(load_checkpoint(checkpoint), z,
                                                         fingerprint);
            return py::make_tuple(d.class_index, d.posterior);
        },
        py::arg("checkpoint"), py::arg("z"), py::arg("fingerprint"),
        "(class index, posterior) for one measurement vector");

    m.def(
        "fine_tune",
        [](const std::string& checkpoint, const Dataset& ds, std::size_t epochs, double lr,
           std::uint64_t seed) {
            TrainConfig cfg = fine_tune_default_config();
            cfg.epochs = epochs;
            cfg.lr_init = lr;
            cfg.seed = seed;
            return save_checkpoint(fine_tune(load_checkpoint(checkpoint), ds, cfg));
        },
        py::arg("checkpoint"), py::arg("dataset"), py::arg("epochs") = 10, py::arg("lr") = 1e-3,
        py::arg("seed") = 0, "Warm-start retraining on post-change data; returns a checkpoint");

    m.def("mae_phase", &mae_phase, py::arg("estimates"), py::arg("truths"),
          "Mean absolute wrap-aware angle error in degrees");
    m.def(
        "mape_magnitude",
        [](const Eigen::MatrixXd& est, const Eigen::MatrixXd& tru) {
            return mape_magnitude(est, tru);
        },
        py::arg("estimates"), py::arg("truths"),
        "Mean absolute percentage magnitude error (zero-magnitude entries excluded)");
    m.def("tolerance_upper_bound", &tolerance_upper_bound, py::arg("errors"), py::arg("p") = 0.95,
          py::arg("gamma") = 0.95,
          "Distribution-free one-sided p/gamma tolerance bound on absolute errors");
    m.def(
        "ks_two_sample",
        [](std::vector<double> x, std::vector<double> y, double alpha) {
            const KsResult r = ks_two_sample(std::move(x), std::move(y), alpha);
            py::dict d;
            d["statistic"] = r.statistic;
            d["p_value"] = r.p_value;
            d["reject"] = r.reject;
            return d;
        },
        py::arg("x"), py::arg("y"), py::arg("alpha") = 0.05);

    m.def("set_parallel_workers", &set_parallel_workers, py::arg("n"),
          "Worker threads for dataset generation (0 = auto); results are worker-invariant");
}
