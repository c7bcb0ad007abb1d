#pragma once

// Reference operating points of the demonstrated switch.

#include <numbers>

#include "zeno/calibration.hpp"
#include "zeno/cavity.hpp"

namespace zeno::reference {

/// Measured observables: finesse 28.3 / 276, R = 0.938, 0.65 % depletion at 13 W.
inline LabObservables measured_observables() {
    LabObservables lab;
    lab.finesse_s = 28.3;
    lab.finesse_d = 276;
    lab.mirror_power_reflectivity = 0.938;
    lab.depletion_fraction = 0.0065;
    lab.depletion_pump_power = 13;
    lab.mirror_spacing = 25e-3;
    lab.crystal_length = 5e-3;
    lab.crystal_index = 2.2;
    return lab;
}

/// Doubly resonant cavity with the quoted (rounded) constants. Note
/// 0.968^2 + 0.250^2 = 0.99952, a small mirror loss.
inline CavityParamsd doubly_resonant() {
    CavityParamsd p;
    p.r_s = 0.968;
    p.t_s = 0.250;
    p.eta_s = 0.977;
    p.rho_d = 0.989;
    p.g = 0.022;
    p.dt = roundtrip_time(measured_observables());
    return p;
}

/// Same cavity with the DF-blocking filter inserted.
inline CavityParamsd lossy_df() {
    CavityParamsd p = doubly_resonant();
    p.eta_s = 0.951;
    p.rho_d = 1e-4;
    return p;
}

/// Signal resonance half width at half maximum in single-pass phase, pi / (2 F_s).
inline double signal_half_width(double finesse_s = 28.3) {
    return std::numbers::pi / (2.0 * finesse_s);
}

}  // namespace zeno::reference
