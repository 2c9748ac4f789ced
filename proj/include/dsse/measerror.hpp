#ifndef DSSE_MEASERROR_HPP
#define DSSE_MEASERROR_HPP

#include <array>
#include <vector>

#include "dsse/phasor.hpp"
#include "dsse/rng.hpp"

namespace dsse {

enum class ChannelKind { Vmag, Vang, Imag, Iang };

/// Hard bound per channel kind: Vmag fraction 0.012, Vang 1 deg,
/// Imag fraction 0.024, Iang 2 deg.
double channel_hard_bound(ChannelKind kind);

struct GmmComponent {
    double weight = 0.0;
    double mean = 0.0; // fraction for magnitudes, degrees for angles
    double std = 0.0;
};

/// 3-component Gaussian mixture of instrumentation-channel error, one
/// mixture per channel kind, with hard truncation bounds.
struct GmmSpec {
    std::array<std::array<GmmComponent, 3>, 4> components; // indexed by ChannelKind

    /// Reference parameters are not published; these defaults center the
    /// components at -0.4/0/+0.4 of the hard bound with std 0.25*bound and
    /// weights 0.25/0.5/0.25. Override via config for other assumptions.
    static GmmSpec defaults();

    void validate() const;
};

struct TveSpec {
    double tve_limit = 0.01; // fraction; per-axis std = tve_limit*|X|/(3*sqrt(2))
};

enum class ErrorMode { None, GaussianTveOnly, TwoLevel };

struct ErrorModelConfig {
    ErrorMode mode = ErrorMode::TwoLevel;
    GmmSpec gmm = GmmSpec::defaults();
    TveSpec tve;
    double meter_noise_pct = 10.0;
};

/// Draw one instrumentation-channel error (fraction or degrees); rejection
/// resampled until inside the channel's hard bound.
double sample_gmm_channel_error(const GmmSpec& spec, ChannelKind kind, Rng& rng);

/// Perturb rectangular components with independent zero-mean Gaussians,
/// std = tve_limit*|X|/(3*sqrt(2)). Zero-magnitude phasors are returned
/// unchanged (flagged via *zero_flag when provided).
Phasor apply_gaussian_tve(const Phasor& x, const TveSpec& spec, Rng& rng,
                          bool* zero_flag = nullptr);

/// Full two-level model on one phasor: GMM magnitude/angle error, then TVE.
Phasor apply_channel_error(const Phasor& x, bool is_voltage, const ErrorModelConfig& cfg,
                           Rng& rng);

/// Apply the configured error mode to an ordered phasor vector. The voltage
/// flags mark which entries are voltage channels (rest are currents).
std::vector<Phasor> apply_two_level_error(const std::vector<Phasor>& measurements,
                                          const std::vector<bool>& is_voltage,
                                          const ErrorModelConfig& cfg, Rng& rng);

/// Multiplicative truncated-Gaussian smart-meter noise: energy * (1 + e),
/// e ~ N(0, (pct/300)^2 * 9)... i.e. 3 sigma = pct%, truncated at +-pct/100.
std::vector<double> perturb_smart_meter(const std::vector<double>& readings, double pct, Rng& rng);

} // namespace dsse

#endif
