#ifndef DSSE_PHASOR_HPP
#define DSSE_PHASOR_HPP

#include <cmath>
#include <complex>

namespace dsse {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Normalize an angle in degrees into (-180, 180].
inline double wrap_angle_deg(double a) {
    a = std::fmod(a, 360.0);
    if (a <= -180.0) a += 360.0;
    if (a > 180.0) a -= 360.0;
    return a;
}

/// Wrap-aware angle difference a - b, in degrees, in (-180, 180].
inline double angle_diff_deg(double a, double b) { return wrap_angle_deg(a - b); }

/// Polar complex value: the atom of all measurements and states.
/// Voltage magnitudes are per-unit; current magnitudes per-unit or amperes.
struct Phasor {
    double magnitude = 0.0;
    double angle_deg = 0.0;

    Phasor() = default;
    Phasor(double mag, double ang) : magnitude(mag), angle_deg(wrap_angle_deg(ang)) {}

    static Phasor from_rect(std::complex<double> z) {
        if (z == std::complex<double>(0.0, 0.0)) return Phasor(0.0, 0.0);
        return Phasor(std::abs(z), rad2deg(std::arg(z)));
    }

    std::complex<double> rect() const {
        return std::polar(magnitude, deg2rad(angle_deg));
    }
};

/// Total vector error of an estimate against a truth phasor, as a fraction.
inline double tve(const Phasor& est, const Phasor& truth) {
    return std::abs(est.rect() - truth.rect()) / std::abs(truth.rect());
}

} // namespace dsse

#endif
