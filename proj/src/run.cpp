#include <exception>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "zeno/config.hpp"
#include "zeno/errors.hpp"

namespace zeno {

namespace {

std::ofstream open_output(const RunConfig& config) {
    if (config.output_path.empty())
        throw ConfigError(0, "output.path",
                          std::string("scenario ") + std::string(to_string(config.scenario)) +
                              " needs an output path (output.path or --output)");
    std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError(0, "output.path", "cannot write '" + config.output_path + "'");
    return out;
}

void finish(std::ofstream& file, const std::string& path) {
    file.flush();
    if (!file) throw std::runtime_error("write failed for '" + path + "'");
}

template <typename F>
std::string optional_metric(F&& metric) {
    try {
        return format_number(metric());
    } catch (const InvalidArgument&) {
        return "n/a";
    }
}

void run_steady(const RunConfig& c, std::ostream& out) {
    const double watts = c.pump.peak_power;
    const auto on = general_steady_state(c.params, watts);
    const auto off = general_steady_state(c.params, 0.0);
    const double contrast = on.transmission() > 0 ? off.transmission() / on.transmission()
                                                  : std::numeric_limits<double>::infinity();
    if (!c.output_path.empty()) {
        auto file = open_output(c);
        file << "pump_W,p_transmitted,p_reflected,t_re,t_im,r_re,r_im\n"
             << format_number(watts) << ',' << format_number(on.transmission()) << ','
             << format_number(on.reflection()) << ',' << format_number(on.t_cavity.real()) << ','
             << format_number(on.t_cavity.imag()) << ',' << format_number(on.r_cavity.real()) << ','
             << format_number(on.r_cavity.imag()) << '\n';
        finish(file, c.output_path);
    }
    out << "steady pump_W=" << format_number(watts) << " |t|^2=" << format_number(on.transmission())
        << " |r|^2=" << format_number(on.reflection()) << " contrast=" << format_number(contrast)
        << '\n';
}

void run_pulse(const RunConfig& c, std::ostream& out) {
    const auto trace = simulate_pulse(c.params, c.pump, c.duration);
    auto file = open_output(c);
    write_trace_csv(file, trace);
    finish(file, c.output_path);
    const auto [on_begin, on_end] = c.pump.on_window();
    const double span = on_end - on_begin;
    out << "pulse steps=" << trace.rows.size() << " plateau_p_t="
        << optional_metric([&] {
               return mean_transmission(trace, on_begin + 0.25 * span, on_begin + 0.75 * span);
           })
        << " contrast=" << optional_metric([&] { return switching_contrast(trace, c.pump); })
        << '\n';
}

void run_scan(const RunConfig& c, std::ostream& out) {
    const auto trace = simulate_scan(c.params, c.scan);
    auto file = open_output(c);
    write_trace_csv(file, trace);
    finish(file, c.output_path);
    out << "scan steps=" << trace.rows.size()
        << " asymmetry=" << optional_metric([&] { return scan_asymmetry(trace); }) << '\n';
}

int run_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto points = power_sweep<double>(c.params, c.powers);
    auto file = open_output(c);
    write_sweep_csv(file, points);
    finish(file, c.output_path);

    std::size_t failures = 0;
    const SweepPoint<double>* lowest = nullptr;
    for (const auto& p : points) {
        if (!p.rel_transmission) {
            ++failures;
            err << "sweep: pump_W=" << format_number(p.pump_power) << ": " << p.error << '\n';
        } else if (!lowest || *p.rel_transmission < *lowest->rel_transmission) {
            lowest = &p;
        }
    }
    out << "sweep-power points=" << points.size() << " failures=" << failures;
    if (lowest)
        out << " min_rel_transmission=" << format_number(*lowest->rel_transmission)
            << " at_pump_W=" << format_number(lowest->pump_power);
    out << '\n';
    return failures ? kExitSolver : kExitOk;
}

void run_calibrate(const RunConfig& c, std::ostream& out) {
    const CavityParamsd p = calibrate(c.lab, c.calib_lambda_s, c.calib_lambda_d);
    auto file = open_output(c);
    file << "# derived by calibrate\n" << emit_params(p);
    finish(file, c.output_path);
    out << "calibrate r_s=" << format_number(p.r_s) << " t_s=" << format_number(p.t_s)
        << " eta_s=" << format_number(p.eta_s) << " rho_d=" << format_number(p.rho_d)
        << " g=" << format_number(p.g) << " dt=" << format_number(p.dt) << '\n';
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const std::string scenario(to_string(config.scenario));
    try {
        switch (config.scenario) {
        case Scenario::Steady: run_steady(config, out); break;
        case Scenario::Pulse: run_pulse(config, out); break;
        case Scenario::Scan: run_scan(config, out); break;
        case Scenario::SweepPower: return run_sweep(config, out, err);
        case Scenario::Calibrate: run_calibrate(config, out); break;
        }
    } catch (const ConfigError& e) {
        err << scenario << ": " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << scenario << ": " << e.what() << '\n';
        return kExitSolver;
    }
    return kExitOk;
}

}  // namespace zeno
