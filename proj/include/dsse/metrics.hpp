#ifndef DSSE_METRICS_HPP
#define DSSE_METRICS_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dsse/stats.hpp"

namespace dsse {

/// State matrices are laid out (2 * node-phases) x samples: magnitude (pu)
/// then angle (deg) per node-phase, in canonical node order.

/// Mean absolute angle error in degrees, wrap-aware.
double mae_phase(const Eigen::MatrixXd& estimates, const Eigen::MatrixXd& truths);

/// Mean absolute percentage magnitude error. Zero-magnitude truths are
/// excluded; the exclusion count is reported when requested.
double mape_magnitude(const Eigen::MatrixXd& estimates, const Eigen::MatrixXd& truths,
                      std::size_t* excluded = nullptr);

/// Absolute angle errors, flattened (for tolerance bounds).
std::vector<double> angle_errors_deg(const Eigen::MatrixXd& estimates,
                                     const Eigen::MatrixXd& truths);
std::vector<double> magnitude_errors_pct(const Eigen::MatrixXd& estimates,
                                         const Eigen::MatrixXd& truths);

struct ToleranceBound {
    double proportion = 0.95;
    double confidence = 0.95;
    double bound = 0.0;
};

struct MetricsReport {
    double angle_mae_deg = 0.0;
    double magnitude_mape_pct = 0.0;
    ToleranceBound angle_tolerance;
    ToleranceBound magnitude_tolerance;
    double ti_accuracy_pct = -1.0; // <0 = not applicable
    std::vector<std::vector<std::size_t>> confusion; // TI only
    double wall_clock_s = 0.0;

    std::string to_table() const;
    std::string to_json() const;
};

} // namespace dsse

#endif
