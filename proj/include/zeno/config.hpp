#pragma once

// Flat `key = value` run configuration.
//
//   # comment
//   scenario = pulse            # steady | pulse | scan | sweep-power | calibrate
//   params.r_s = 0.968          # r_s t_s eta_s rho_d g required; phi_s phi_d
//   ...                         # lambda_s lambda_d dt optional
//   pump.kind = trapezoidal     # rectangular | trapezoidal | table
//   pump.peak_power = 17
//   output.path = out.csv
//
// Section prefixes: params. pump. scan. sweep. calib. output. Each scenario
// accepts only its own sections; anything else is an error carrying the key
// and line number.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "zeno/calibration.hpp"
#include "zeno/cavity.hpp"
#include "zeno/dynamics.hpp"
#include "zeno/steady_state.hpp"

namespace zeno {

enum class Scenario { Steady, Pulse, Scan, SweepPower, Calibrate };

std::string_view to_string(Scenario scenario);
std::optional<Scenario> scenario_from_string(std::string_view name);

struct RunConfig {
    Scenario scenario = Scenario::Steady;
    CavityParamsd params;
    PumpWaveform pump;                ///< steady uses only peak_power
    double duration = 0;              ///< pulse simulation length [s]
    ScanSpec scan;
    std::vector<double> powers;       ///< sweep-power grid [W]
    LabObservables lab;
    double calib_lambda_s = 633e-9;
    double calib_lambda_d = 1070e-9;
    std::string output_path;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::size_t line, std::string key, const std::string& message);

    std::size_t line() const noexcept { return line_; }  ///< 0 when not tied to a line
    const std::string& key() const noexcept { return key_; }

private:
    std::size_t line_;
    std::string key_;
};

/// Parses and validates a configuration document. `scenario` (from the
/// command line) overrides the absent `scenario` key and must agree with a
/// present one; with neither, the scenario is steady. Relative
/// pump.samples_file paths resolve against `base_dir`.
RunConfig parse_config(std::string_view text, std::optional<Scenario> scenario = std::nullopt,
                       const std::filesystem::path& base_dir = {});

/// Text that parse_config maps back to an equal RunConfig.
std::string emit_config(const RunConfig& config);

/// `params.*` lines only, with every field written out.
std::string emit_params(const CavityParamsd& params);

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitSolver = 2;

/// Executes the scenario, writes its output file and prints a one-line
/// summary to `out`. Diagnostics go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Trace CSV: time_s,pump_W,p_transmitted,p_reflected,p_converted,phi_s_rad,phi_d_rad
void write_trace_csv(std::ostream& os, const SimulationTrace& trace);

/// Sweep CSV: pump_W,rel_transmission (nan for failed points)
void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint<double>>& points);

/// 9 significant digits, '.' decimal separator.
std::string format_number(double value);

}  // namespace zeno
