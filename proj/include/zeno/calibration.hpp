#pragma once

// Lab observables -> CavityParams, with no fitted parameters.

#include <utility>

#include "zeno/cavity.hpp"

namespace zeno {

inline constexpr double kSpeedOfLight = 299792458.0;

struct LabObservables {
    double finesse_s = 0;
    double finesse_d = 0;
    double mirror_power_reflectivity = 0;
    double depletion_fraction = 0;
    double depletion_pump_power = 0;  ///< [W]
    double mirror_spacing = 25e-3;    ///< [m]
    double crystal_length = 5e-3;     ///< [m]
    double crystal_index = 2.2;       ///< assumed, lithium niobate near 633 nm

    friend bool operator==(const LabObservables&, const LabObservables&) = default;
};

struct MirrorCoefficients {
    double r = 0;
    double t = 0;
};

/// Finesse of a cavity whose field survives a round trip with amplitude rho:
/// F = pi sqrt(rho) / (1 - rho).
double finesse_from_roundtrip(double rho);

/// Inverse of finesse_from_roundtrip on rho in (0, 1). Requires F > 1.
double roundtrip_amplitude_from_finesse(double finesse);

/// r = sqrt(R), t = sqrt(1 - R) for 0 < R < 1.
MirrorCoefficients mirror_coeffs(double power_reflectivity);

/// Single-pass signal amplitude transmission eta_s = sqrt(rho(F_s) / r_s^2).
/// Throws when the finesse is too high for the mirrors (eta_s > 1).
double eta_from_finesse(double finesse_s, double r_s);

/// g such that one pass with an empty DF field depletes the signal by
/// sin^2(g sqrt(P)) = depletion.
double gain_from_depletion(double depletion, double pump_power);

/// Wraps to (-pi, pi].
double wrap_phase(double phase);

/// Single-pass phases after moving a mirror by dL: phi += 2 pi dL / lambda,
/// wrapped to (-pi, pi].
std::pair<double, double> phases_from_displacement(double displacement, double phi_s0,
                                                   double phi_d0, const CavityParamsd& params);

/// 2 ((spacing - crystal) + n * crystal) / c.
double roundtrip_time(const LabObservables& geometry);

/// Full pipeline. Phases are set to zero (doubly resonant).
CavityParamsd calibrate(const LabObservables& lab, double lambda_s = 633e-9,
                        double lambda_d = 1070e-9);

/// Checks the observable ranges; throws InvalidArgument.
void validate(const LabObservables& lab);

}  // namespace zeno
