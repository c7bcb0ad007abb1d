#include "zeno/calibration.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "zeno/errors.hpp"

namespace zeno {

double finesse_from_roundtrip(double rho) {
    if (!(rho > 0 && rho < 1)) throw InvalidArgument("finesse_from_roundtrip: rho must be in (0, 1)");
    return std::numbers::pi * std::sqrt(rho) / (1.0 - rho);
}

double roundtrip_amplitude_from_finesse(double finesse) {
    if (!(finesse > 1) || std::isnan(finesse))
        throw InvalidArgument("roundtrip_amplitude_from_finesse: finesse must be > 1");
    if (std::isinf(finesse)) return 1.0;
    // With x = sqrt(rho): F x^2 + pi x - F = 0, positive root.
    const double pi = std::numbers::pi;
    const double x = 2.0 * finesse / (pi + std::sqrt(pi * pi + 4.0 * finesse * finesse));
    return x * x;
}

MirrorCoefficients mirror_coeffs(double power_reflectivity) {
    if (!(power_reflectivity > 0 && power_reflectivity < 1))
        throw InvalidArgument("mirror_coeffs: power reflectivity must be in (0, 1)");
    return {std::sqrt(power_reflectivity), std::sqrt(1.0 - power_reflectivity)};
}

double eta_from_finesse(double finesse_s, double r_s) {
    if (!(r_s > 0 && r_s <= 1)) throw InvalidArgument("eta_from_finesse: r_s must be in (0, 1]");
    const double rho = roundtrip_amplitude_from_finesse(finesse_s);
    const double ratio = rho / (r_s * r_s);
    if (ratio > 1.0 + 1e-12)
        throw InvalidArgument("eta_from_finesse: finesse implies gain (rho = " +
                              std::to_string(rho) + " > r_s^2 = " + std::to_string(r_s * r_s) + ")");
    return std::sqrt(std::min(ratio, 1.0));
}

double gain_from_depletion(double depletion, double pump_power) {
    if (!(depletion > 0 && depletion <= 1))
        throw InvalidArgument("gain_from_depletion: depletion must be in (0, 1]");
    if (!(pump_power > 0) || !std::isfinite(pump_power))
        throw InvalidArgument("gain_from_depletion: pump power must be > 0");
    return std::asin(std::sqrt(depletion)) / std::sqrt(pump_power);
}

double wrap_phase(double phase) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double wrapped = phase - two_pi * std::ceil((phase - std::numbers::pi) / two_pi);
    return wrapped <= -std::numbers::pi ? wrapped + two_pi : wrapped;
}

std::pair<double, double> phases_from_displacement(double displacement, double phi_s0,
                                                   double phi_d0, const CavityParamsd& params) {
    if (!std::isfinite(displacement))
        throw InvalidArgument("phases_from_displacement: displacement must be finite");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    return {wrap_phase(phi_s0 + two_pi * displacement / params.lambda_s),
            wrap_phase(phi_d0 + two_pi * displacement / params.lambda_d)};
}

double roundtrip_time(const LabObservables& geometry) {
    if (!(geometry.mirror_spacing > 0) || !(geometry.crystal_length >= 0) ||
        geometry.crystal_length > geometry.mirror_spacing)
        throw InvalidArgument("roundtrip_time: need spacing > 0 and 0 <= crystal <= spacing");
    if (!(geometry.crystal_index >= 1))
        throw InvalidArgument("roundtrip_time: crystal index must be >= 1");
    const double optical = (geometry.mirror_spacing - geometry.crystal_length) +
                           geometry.crystal_index * geometry.crystal_length;
    return 2.0 * optical / kSpeedOfLight;
}

void validate(const LabObservables& lab) {
    auto fail = [](const char* field, const char* bound) {
        throw InvalidArgument(std::string(field) + " violates " + bound);
    };
    if (!(lab.finesse_s > 1)) fail("finesse_s", "finesse_s > 1");
    if (!(lab.finesse_d > 1)) fail("finesse_d", "finesse_d > 1");
    if (!(lab.mirror_power_reflectivity > 0 && lab.mirror_power_reflectivity < 1))
        fail("mirror_power_reflectivity", "0 < R < 1");
    if (!(lab.depletion_fraction > 0 && lab.depletion_fraction < 1))
        fail("depletion_fraction", "0 < depletion < 1");
    if (!(lab.depletion_pump_power > 0)) fail("depletion_pump_power", "pump > 0");
    if (!(lab.mirror_spacing > 0)) fail("mirror_spacing", "spacing > 0");
    if (!(lab.crystal_length > 0)) fail("crystal_length", "crystal length > 0");
    if (!(lab.crystal_index >= 1)) fail("crystal_index", "index >= 1");
}

CavityParamsd calibrate(const LabObservables& lab, double lambda_s, double lambda_d) {
    validate(lab);
    const MirrorCoefficients mirror = mirror_coeffs(lab.mirror_power_reflectivity);

    CavityParamsd p;
    p.r_s = mirror.r;
    p.t_s = mirror.t;
    p.eta_s = eta_from_finesse(lab.finesse_s, mirror.r);
    p.rho_d = roundtrip_amplitude_from_finesse(lab.finesse_d);
    p.phi_s = 0;
    p.phi_d = 0;
    p.g = gain_from_depletion(lab.depletion_fraction, lab.depletion_pump_power);
    p.lambda_s = lambda_s;
    p.lambda_d = lambda_d;
    p.dt = roundtrip_time(lab);
    zeno::validate(p);
    return p;
}

}  // namespace zeno
