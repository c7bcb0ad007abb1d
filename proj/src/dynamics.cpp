#include "zeno/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>

#include "zeno/calibration.hpp"
#include "zeno/errors.hpp"
#include "zeno/steady_state.hpp"

namespace zeno {

namespace {

constexpr double kBaselineWindow = 5e-9;
constexpr std::size_t kMaxSteps = 50'000'000;

bool finite_nonneg(double v) { return std::isfinite(v) && v >= 0; }

std::size_t step_count(double duration, double dt) {
    if (!(duration > 0) || !std::isfinite(duration))
        throw InvalidArgument("simulation duration must be finite and > 0");
    const double steps = std::ceil(duration / dt - 1e-9);
    if (steps > static_cast<double>(kMaxSteps))
        throw InvalidArgument("simulation needs " + std::to_string(steps) + " steps (limit " +
                              std::to_string(kMaxSteps) + ")");
    return static_cast<std::size_t>(std::max(steps, 1.0));
}

// Shared stepping loop. pump_at(t) gives I_P, phases_at(t) gives (phi_s, phi_d).
template <typename PumpAt, typename PhasesAt>
SimulationTrace run_steps(const CavityParamsd& params, std::size_t steps, PumpAt pump_at,
                          PhasesAt phases_at) {
    validate(params);
    SimulationTrace trace;
    trace.dt = params.dt;
    trace.rows.reserve(steps);

    CavityParamsd local = params;
    std::tie(local.phi_s, local.phi_d) = phases_at(0.0);
    IntracavityStated state;
    {
        const auto warm = general_steady_state(local, 0.0);
        state = {warm.a_s, warm.b_d};
    }
    trace.initial_state = state;

    const Complex<double> drive(1.0, 0.0);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t0 = static_cast<double>(i) * params.dt;
        const double mid = t0 + 0.5 * params.dt;
        const double pump = pump_at(mid);
        if (!finite_nonneg(pump))
            throw InvalidArgument("pump waveform is negative or non-finite at t = " +
                                  std::to_string(mid));
        std::tie(local.phi_s, local.phi_d) = phases_at(mid);

        const auto step = round_trip_step(state, drive, pump, local);
        trace.rows.push_back(
            {t0, pump, step.ports.p_t, step.ports.p_r, step.ports.p_conv, local.phi_s, local.phi_d});
        state = step.next;
    }
    trace.final_state = state;
    return trace;
}

double vertex_time(double x0, double y0, double x1, double y1, double x2, double y2) {
    const double a = (x1 - x0) * (y1 - y2);
    const double b = (x1 - x2) * (y1 - y0);
    const double denom = a - b;
    if (denom == 0) return x1;
    const double vertex = x1 - 0.5 * ((x1 - x0) * a - (x1 - x2) * b) / denom;
    return std::clamp(vertex, x0, x2);
}

double interpolate(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    const auto it = std::upper_bound(xs.begin(), xs.end(), x);
    if (it == xs.begin()) return ys.front();
    if (it == xs.end()) return ys.back();
    const std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    const std::size_t lo = hi - 1;
    const double w = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + w * (ys[hi] - ys[lo]);
}

}  // namespace

PumpWaveform PumpWaveform::rectangular(double peak, double width, double start) {
    PumpWaveform p;
    p.kind = PumpKind::Rectangular;
    p.peak_power = peak;
    p.width = width;
    p.start_time = start;
    return p;
}

PumpWaveform PumpWaveform::trapezoidal(double peak, double width, double rise, double start) {
    PumpWaveform p;
    p.kind = PumpKind::Trapezoidal;
    p.peak_power = peak;
    p.width = width;
    p.rise_time = rise;
    p.start_time = start;
    return p;
}

PumpWaveform PumpWaveform::table(std::vector<std::pair<double, double>> samples) {
    PumpWaveform p;
    p.kind = PumpKind::Table;
    p.samples = std::move(samples);
    for (const auto& s : p.samples) p.peak_power = std::max(p.peak_power, s.second);
    return p;
}

double PumpWaveform::power(double t) const {
    switch (kind) {
    case PumpKind::Rectangular:
        return (t >= start_time && t < start_time + width) ? peak_power : 0.0;
    case PumpKind::Trapezoidal: {
        const double x = t - start_time;
        if (x < 0 || x >= width + rise_time) return 0.0;
        if (x < rise_time) return peak_power * x / rise_time;
        if (x < width) return peak_power;
        return peak_power * (width + rise_time - x) / rise_time;
    }
    case PumpKind::Table: {
        if (samples.empty() || t < samples.front().first || t > samples.back().first) return 0.0;
        auto it = std::upper_bound(samples.begin(), samples.end(), t,
                                   [](double v, const auto& s) { return v < s.first; });
        if (it == samples.end()) return samples.back().second;
        const auto& hi = *it;
        const auto& lo = *(it - 1);
        const double w = (t - lo.first) / (hi.first - lo.first);
        return lo.second + w * (hi.second - lo.second);
    }
    }
    return 0.0;
}

double PumpWaveform::support_begin() const {
    if (kind == PumpKind::Table) return samples.empty() ? 0.0 : samples.front().first;
    return start_time;
}

double PumpWaveform::support_end() const {
    switch (kind) {
    case PumpKind::Rectangular: return start_time + width;
    case PumpKind::Trapezoidal: return start_time + width + rise_time;
    case PumpKind::Table: return samples.empty() ? 0.0 : samples.back().first;
    }
    return start_time;
}

std::pair<double, double> PumpWaveform::on_window() const {
    if (kind == PumpKind::Table) return {support_begin(), support_end()};
    const double begin = start_time + 0.5 * rise_time;
    return {begin, begin + width};
}

void validate(const PumpWaveform& pump) {
    if (pump.kind == PumpKind::Table) {
        if (pump.samples.size() < 2) throw InvalidArgument("pump table needs at least two samples");
        for (std::size_t i = 0; i < pump.samples.size(); ++i) {
            const auto [t, w] = pump.samples[i];
            if (!std::isfinite(t) || !finite_nonneg(w))
                throw InvalidArgument("pump table sample " + std::to_string(i) +
                                      " is negative or non-finite");
            if (i > 0 && !(t > pump.samples[i - 1].first))
                throw InvalidArgument("pump table times must be strictly increasing (sample " +
                                      std::to_string(i) + ")");
        }
        return;
    }
    if (!finite_nonneg(pump.peak_power)) throw InvalidArgument("pump peak_power must be >= 0");
    if (!finite_nonneg(pump.width)) throw InvalidArgument("pump width must be >= 0");
    if (!finite_nonneg(pump.start_time)) throw InvalidArgument("pump start_time must be >= 0");
    if (!finite_nonneg(pump.rise_time)) throw InvalidArgument("pump rise_time must be >= 0");
    if (pump.kind == PumpKind::Rectangular && pump.rise_time != 0)
        throw InvalidArgument("rectangular pump has rise_time = 0");
    if (pump.kind == PumpKind::Trapezoidal && pump.rise_time > pump.width)
        throw InvalidArgument("trapezoidal pump needs rise_time <= width");
}

double ScanSpec::pump_power(double t) const {
    if (t < 0) return 0.0;
    return pulse.power(std::fmod(t, pump_period));
}

void validate(const ScanSpec& spec) {
    if (!std::isfinite(spec.scan_rate)) throw InvalidArgument("scan_rate must be finite");
    if (!(spec.duration > 0) || !std::isfinite(spec.duration))
        throw InvalidArgument("scan duration must be > 0");
    if (!(spec.pump_period > 0) || !std::isfinite(spec.pump_period))
        throw InvalidArgument("scan pump_period must be > 0");
    if (!std::isfinite(spec.phi_s0) || !std::isfinite(spec.phi_d0))
        throw InvalidArgument("scan start phases must be finite");
    validate(spec.pulse);
    if (spec.pulse.support_end() > spec.pump_period)
        throw InvalidArgument("pulse template does not fit in pump_period");
}

double cavity_lifetime(const CavityParamsd& params) {
    const double signal = params.dt / (1.0 - params.r_s * params.r_s * params.eta_s * params.eta_s);
    const double df = params.rho_d < 1 ? params.dt / (1.0 - params.rho_d)
                                       : std::numeric_limits<double>::infinity();
    return std::max(signal, df);
}

SimulationTrace simulate_pulse(const CavityParamsd& params, const PumpWaveform& pump,
                               double duration) {
    validate(pump);
    if (duration < pump.support_end())
        throw InvalidArgument("simulation duration does not cover the pump pulse");
    const std::size_t steps = step_count(duration, params.dt);
    const std::pair<double, double> phases{params.phi_s, params.phi_d};
    return run_steps(
        params, steps, [&](double t) { return pump.power(t); },
        [&](double) { return phases; });
}

SimulationTrace simulate_scan(const CavityParamsd& params, const ScanSpec& spec) {
    validate(spec);
    const std::size_t steps = step_count(spec.duration, params.dt);
    return run_steps(
        params, steps, [&](double t) { return spec.pump_power(t); },
        [&](double t) {
            return phases_from_displacement(spec.scan_rate * t, spec.phi_s0, spec.phi_d0, params);
        });
}

double bandwidth_scan_rate(double lambda_s, double finesse_s, double traverse_time) {
    if (!(finesse_s > 0) || !(traverse_time > 0) || !(lambda_s > 0))
        throw InvalidArgument("bandwidth_scan_rate: arguments must be > 0");
    // Round-trip phase 2 phi_s moves by 4 pi dL / lambda_s.
    return lambda_s / (2.0 * finesse_s * traverse_time);
}

ScanSpec centered_scan(const CavityParamsd& params, double scan_rate, double duration,
                       double pump_period, const PumpWaveform& pulse, double phi_d_at_crossing) {
    const auto [on_begin, on_end] = pulse.on_window();
    const double centre = 0.5 * (on_begin + on_end);
    const double index = std::round((0.5 * duration - centre) / pump_period);
    const double crossing = centre + index * pump_period;
    constexpr double two_pi = 2.0 * std::numbers::pi;

    ScanSpec spec;
    spec.scan_rate = scan_rate;
    spec.duration = duration;
    spec.pump_period = pump_period;
    spec.pulse = pulse;
    spec.phi_s0 = wrap_phase(-two_pi * scan_rate * crossing / params.lambda_s);
    spec.phi_d0 = wrap_phase(phi_d_at_crossing - two_pi * scan_rate * crossing / params.lambda_d);
    validate(spec);
    return spec;
}

double scan_asymmetry(const SimulationTrace& trace) {
    const auto& rows = trace.rows;
    std::vector<double> centres;
    std::vector<double> deviation;
    std::vector<double> baseline;

    std::size_t i = 0;
    while (i < rows.size()) {
        if (rows[i].pump <= 0) {
            ++i;
            continue;
        }
        const std::size_t begin = i;
        while (i < rows.size() && rows[i].pump > 0) ++i;
        const std::size_t end = i;
        if (begin == 0 || end == rows.size()) continue;  // truncated pulse

        const std::size_t len = end - begin;
        const std::size_t lo = begin + len / 4;
        const std::size_t hi = std::max(lo + 1, begin + (3 * len) / 4);
        double level = 0;
        for (std::size_t j = lo; j < hi; ++j) level += rows[j].p_t;
        level /= static_cast<double>(hi - lo);

        centres.push_back(0.5 * (rows[begin].time + rows[end - 1].time));
        baseline.push_back(rows[begin - 1].p_t);
        deviation.push_back(level - baseline.back());
    }
    if (centres.size() < 3) throw InvalidArgument("scan_asymmetry: fewer than three pump pulses");

    const std::size_t peak = static_cast<std::size_t>(
        std::max_element(baseline.begin(), baseline.end()) - baseline.begin());
    if (peak == 0 || peak + 1 == baseline.size())
        throw InvalidArgument("scan_asymmetry: no interior pump-off transmission peak");
    const double axis = vertex_time(centres[peak - 1], baseline[peak - 1], centres[peak],
                                    baseline[peak], centres[peak + 1], baseline[peak + 1]);

    double diff2 = 0, own2 = 0, mirrored2 = 0;
    for (std::size_t k = 0; k < centres.size(); ++k) {
        const double image = 2.0 * axis - centres[k];
        if (image < centres.front() || image > centres.back()) continue;
        const double mirrored = interpolate(centres, deviation, image);
        diff2 += (deviation[k] - mirrored) * (deviation[k] - mirrored);
        own2 += deviation[k] * deviation[k];
        mirrored2 += mirrored * mirrored;
    }
    const double norm = std::sqrt(own2) + std::sqrt(mirrored2);
    return norm > 0 ? std::sqrt(diff2) / norm : 0.0;
}

double mean_transmission(const SimulationTrace& trace, double begin, double end) {
    double sum = 0;
    std::size_t count = 0;
    for (const auto& row : trace.rows) {
        const double t = row.time + 0.5 * trace.dt;
        if (t >= begin && t < end) {
            sum += row.p_t;
            ++count;
        }
    }
    if (count == 0) throw InvalidArgument("mean_transmission: empty window");
    return sum / static_cast<double>(count);
}

double switching_contrast(const SimulationTrace& trace, const PumpWaveform& pump) {
    const double start = pump.support_begin();
    const double baseline = mean_transmission(trace, start - kBaselineWindow, start);
    const auto [on_begin, on_end] = pump.on_window();
    const double span = on_end - on_begin;
    const double plateau =
        mean_transmission(trace, on_begin + 0.25 * span, on_begin + 0.75 * span);
    if (plateau == 0) return std::numeric_limits<double>::infinity();
    return baseline / plateau;
}

}  // namespace zeno
