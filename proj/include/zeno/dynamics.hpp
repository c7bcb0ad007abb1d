#pragma once

// Time-domain scenarios built on round_trip_step: one step per round-trip
// time dt, pump power sampled at each step midpoint.

#include <cstddef>
#include <utility>
#include <vector>

#include "zeno/cavity.hpp"

namespace zeno {

enum class PumpKind { Rectangular, Trapezoidal, Table };

/// Pump power I_P(t) [W].
///
/// Analytic pulses ramp linearly over `rise_time` from `start_time`, hold the
/// peak, and ramp down, with `width` the full width at half maximum; the
/// support is [start_time, start_time + width + rise_time). Rectangular
/// pulses have rise_time = 0. Table pulses interpolate `samples` linearly and
/// are zero outside the sampled interval.
struct PumpWaveform {
    PumpKind kind = PumpKind::Rectangular;
    double peak_power = 0;
    double width = 0;
    double rise_time = 0;
    double start_time = 0;
    std::vector<std::pair<double, double>> samples;  ///< (time [s], power [W])

    static PumpWaveform rectangular(double peak, double width, double start);
    static PumpWaveform trapezoidal(double peak, double width, double rise, double start);
    static PumpWaveform table(std::vector<std::pair<double, double>> samples);

    double power(double t) const;
    /// First and last instant of nonzero power.
    double support_begin() const;
    double support_end() const;
    /// Half-maximum interval (the support for tables).
    std::pair<double, double> on_window() const;

    friend bool operator==(const PumpWaveform&, const PumpWaveform&) = default;
};

void validate(const PumpWaveform& pump);

struct TraceRow {
    double time = 0;  ///< step start [s]
    double pump = 0;  ///< [W], sampled at time + dt/2
    double p_t = 0;
    double p_r = 0;
    double p_conv = 0;
    double phi_s = 0;
    double phi_d = 0;
};

struct SimulationTrace {
    double dt = 0;
    std::vector<TraceRow> rows;
    IntracavityStated initial_state;
    IntracavityStated final_state;
};

struct ScanSpec {
    double scan_rate = 0;  ///< mirror displacement rate [m/s]
    double duration = 0;
    double pump_period = 0;
    PumpWaveform pulse;    ///< template, repeated every pump_period from t = 0
    double phi_s0 = 0;
    double phi_d0 = 0;

    /// Pulse-train power at time t.
    double pump_power(double t) const;

    friend bool operator==(const ScanSpec&, const ScanSpec&) = default;
};

void validate(const ScanSpec& spec);

/// Amplitude 1/e time of the slowest unpumped cavity mode:
/// max(dt / (1 - r_s^2 eta_s^2), dt / (1 - rho_d)).
double cavity_lifetime(const CavityParamsd& params);

/// Pulse response starting from the pump-off steady state (CW signal).
SimulationTrace simulate_pulse(const CavityParamsd& params, const PumpWaveform& pump,
                               double duration);

/// Mirror scan: phases advance with displacement scan_rate * t while the
/// pulse train is applied.
SimulationTrace simulate_scan(const CavityParamsd& params, const ScanSpec& spec);

/// Scan rate that moves the signal resonance through its full width
/// (2 pi / F_s of round-trip phase) in `traverse_time`.
double bandwidth_scan_rate(double lambda_s, double finesse_s, double traverse_time);

/// Scan whose signal resonance (phi_s = 0) is crossed at the centre of the
/// pulse nearest mid-scan, with DF detuning `phi_d_at_crossing` there.
ScanSpec centered_scan(const CavityParamsd& params, double scan_rate, double duration,
                       double pump_period, const PumpWaveform& pulse, double phi_d_at_crossing);

/// Left/right asymmetry of the switched-transmission envelope of a scan.
///
/// Each pump pulse contributes one envelope sample: the mean p_t over the
/// central 50% of its pump-on rows minus p_t on the row just before it. The
/// pump-off resonance peak is located by a parabola through the largest
/// pre-pulse p_t and its neighbours. The envelope is reflected about that
/// time (linear interpolation) and the result is
/// ||s - Rs|| / (||s|| + ||Rs||), in [0, 1], 0 for an even trace.
///
/// Throws InvalidArgument when fewer than three pulses are present or the
/// pump-off maximum lies on the first or last pulse.
double scan_asymmetry(const SimulationTrace& trace);

/// Mean p_t over the 5 ns before the pulse divided by mean p_t over the
/// central 50% of the pump-on window. +inf when the plateau mean is zero.
double switching_contrast(const SimulationTrace& trace, const PumpWaveform& pump);

/// Mean p_t of rows whose pump sample time lies in [begin, end).
double mean_transmission(const SimulationTrace& trace, double begin, double end);

}  // namespace zeno
