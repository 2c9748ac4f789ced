#ifndef DSSE_LOADMODEL_HPP
#define DSSE_LOADMODEL_HPP

#include <map>
#include <string>
#include <vector>

#include "dsse/feeder.hpp"
#include "dsse/powerflow.hpp"
#include "dsse/rng.hpp"

namespace dsse {

struct SmartMeterSeries {
    std::string meter_id;
    std::string transformer_group;
    std::vector<std::pair<double, double>> readings; // (interval hours, energy kWh)
};

/// Parse the delimited smart-meter file:
/// meter_id,transformer_group,interval_hours,energy_kwh (header required).
std::vector<SmartMeterSeries> parse_smart_meter_csv(const std::string& text);

/// Per transformer group, per time slot: sum over meters of energy/interval (kW).
std::map<std::string, std::vector<double>> aggregate_to_transformer(
    const std::vector<SmartMeterSeries>& series);

/// Gaussian-kernel KDE over aggregated load samples.
struct LoadPdf {
    std::string group;
    std::vector<double> sample_points; // fitting split, kW
    double bandwidth = 0.0;            // kW

    double pdf(double x) const;
    double cdf(double x) const;
    double quantile(double p) const;
    double sample(Rng& rng) const;
};

/// Fit a Gaussian KDE: Silverman bandwidth on a 90% split, then widened by
/// the smallest factor >= 1 until a KS test against the 10% held-out split
/// passes at the 5% level and >= target_coverage of held-out points fall in
/// the KDE's central 95% inter-quantile range.
LoadPdf fit_kde(const std::vector<double>& samples, double target_coverage = 0.95,
                std::uint64_t seed = 0, const std::string& group = "");

struct SamplerConfig {
    double pf_lo = 0.95;
    double pf_hi = 1.0;
    double dg_lo = 0.5; // multiplicative variation range
    double dg_hi = 1.5;
    std::uint64_t master_seed = 0;
};

/// Draw n Monte-Carlo operating points. Metered loads take P from their
/// group KDE (truncated at 0), unmetered loads and DG scale by independent
/// uniforms over the variation range; Q = P tan(acos pf), pf ~ U[pf_lo, pf_hi].
/// Scenario i uses the derived seed (master_seed, i): order-independent streams.
std::vector<Injections> sample_loads(const std::map<std::string, LoadPdf>& pdfs,
                                     const FeederModel& model, const SamplerConfig& cfg,
                                     std::size_t n);

/// Single scenario by index (the unit sample_loads is built from).
Injections sample_one_load_scenario(const std::map<std::string, LoadPdf>& pdfs,
                                    const FeederModel& model, const SamplerConfig& cfg,
                                    std::size_t scenario_index);

} // namespace dsse

#endif
