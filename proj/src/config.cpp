#include "zeno/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"params", {"r_s", "t_s", "eta_s", "rho_d", "phi_s", "phi_d", "g", "lambda_s", "lambda_d", "dt"}},
        {"pump", {"kind", "peak_power", "width", "rise_time", "start_time", "duration", "samples",
                  "samples_file"}},
        {"scan", {"rate", "traverse_time", "finesse_s", "duration", "period", "phi_s0", "phi_d0",
                  "crossing_phi_d"}},
        {"sweep", {"powers", "min", "max", "points"}},
        {"calib", {"finesse_s", "finesse_d", "reflectivity", "depletion", "depletion_pump_power",
                   "mirror_spacing", "crystal_length", "crystal_index", "lambda_s", "lambda_d"}},
        {"output", {"path"}},
    };
    return keys;
}

std::set<std::string> allowed_sections(Scenario s) {
    switch (s) {
    case Scenario::Steady: return {"params", "pump", "output"};
    case Scenario::Pulse: return {"params", "pump", "output"};
    case Scenario::Scan: return {"params", "pump", "scan", "output"};
    case Scenario::SweepPower: return {"params", "sweep", "output"};
    case Scenario::Calibrate: return {"calib", "output"};
    }
    return {};
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string_view strip_comment(std::string_view line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '#' && (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t'))
            return line.substr(0, i);
    }
    return line;
}

std::optional<double> to_double(std::string_view text) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
    return value;
}

std::string emit_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Entry {
    std::string value;
    std::size_t line = 0;
};

class Document {
public:
    explicit Document(std::string_view text) {
        std::size_t line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const auto end = std::min(text.find('\n', pos), text.size());
            ++line_no;
            add_line(text.substr(pos, end - pos), line_no);
            pos = end + 1;
        }
    }

    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    std::size_t line_of(const std::string& key) const {
        const auto it = entries_.find(key);
        return it == entries_.end() ? 0 : it->second.line;
    }

    const Entry* find(const std::string& key) const {
        const auto it = entries_.find(key);
        return it == entries_.end() ? nullptr : &it->second;
    }

    std::optional<std::string> text(const std::string& key) const {
        const Entry* e = find(key);
        if (!e) return std::nullopt;
        return e->value;
    }

    double number(const std::string& key) const {
        const Entry* e = find(key);
        if (!e) throw ConfigError(0, key, "missing required key");
        const auto v = to_double(e->value);
        if (!v) throw ConfigError(e->line, key, "not a number: '" + e->value + "'");
        return *v;
    }

    double number(const std::string& key, double fallback) const {
        return has(key) ? number(key) : fallback;
    }

    /// First key (by line) in each section prefix.
    std::map<std::string, std::pair<std::size_t, std::string>> sections() const {
        std::map<std::string, std::pair<std::size_t, std::string>> out;
        for (const auto& [key, entry] : entries_) {
            const auto dot = key.find('.');
            if (dot == std::string::npos) continue;
            const std::string section = key.substr(0, dot);
            auto it = out.find(section);
            if (it == out.end() || entry.line < it->second.first)
                out[section] = {entry.line, key};
        }
        return out;
    }

    const std::map<std::string, Entry>& entries() const { return entries_; }

private:
    void add_line(std::string_view raw, std::size_t line_no) {
        const auto line = trim(strip_comment(raw));
        if (line.empty()) return;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(line_no, std::string(line), "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (key.empty()) throw ConfigError(line_no, key, "empty key");
        if (entries_.count(key))
            throw ConfigError(line_no, key,
                              "duplicate key (first set on line " +
                                  std::to_string(entries_.at(key).line) + ")");
        entries_[key] = {value, line_no};
    }

    std::map<std::string, Entry> entries_;
};

void check_keys(const Document& doc) {
    for (const auto& [key, entry] : doc.entries()) {
        if (key == "scenario") continue;
        const auto dot = key.find('.');
        const std::string section = dot == std::string::npos ? key : key.substr(0, dot);
        const auto it = known_keys().find(section);
        if (dot == std::string::npos || it == known_keys().end())
            throw ConfigError(entry.line, key, "unknown key");
        if (!it->second.count(key.substr(dot + 1)))
            throw ConfigError(entry.line, key, "unknown key");
    }
}

// Maps an InvalidArgument from a validate() call to the offending key.
[[noreturn]] void rethrow_invalid(const Document& doc, const std::string& section,
                                  const InvalidArgument& e) {
    const std::string message = e.what();
    const std::string field = message.substr(0, message.find(' '));
    const std::string key = section + "." + field;
    if (doc.has(key)) throw ConfigError(doc.line_of(key), key, message);
    const auto sections = doc.sections();
    const auto it = sections.find(section);
    if (it != sections.end()) throw ConfigError(it->second.first, key, message);
    throw ConfigError(0, key, message);
}

CavityParamsd parse_params(const Document& doc) {
    CavityParamsd p;
    p.r_s = doc.number("params.r_s");
    p.t_s = doc.number("params.t_s");
    p.eta_s = doc.number("params.eta_s");
    p.rho_d = doc.number("params.rho_d");
    p.g = doc.number("params.g");
    p.phi_s = doc.number("params.phi_s", 0.0);
    p.phi_d = doc.number("params.phi_d", 0.0);
    p.lambda_s = doc.number("params.lambda_s", p.lambda_s);
    p.lambda_d = doc.number("params.lambda_d", p.lambda_d);
    p.dt = doc.number("params.dt", p.dt);
    try {
        validate(p);
    } catch (const InvalidArgument& e) {
        rethrow_invalid(doc, "params", e);
    }
    return p;
}

std::vector<std::pair<double, double>> parse_samples(std::string_view list, std::size_t line,
                                                     const std::string& key) {
    std::vector<std::pair<double, double>> out;
    std::size_t pos = 0;
    while (pos < list.size()) {
        auto end = list.find(',', pos);
        if (end == std::string_view::npos) end = list.size();
        const auto item = trim(list.substr(pos, end - pos));
        const auto colon = item.find(':');
        const auto t = colon == std::string_view::npos ? std::nullopt : to_double(item.substr(0, colon));
        const auto w = colon == std::string_view::npos ? std::nullopt : to_double(item.substr(colon + 1));
        if (!t || !w) throw ConfigError(line, key, "expected 'time:power' pairs, got '" + std::string(item) + "'");
        out.emplace_back(*t, *w);
        pos = end + 1;
    }
    return out;
}

std::vector<std::pair<double, double>> read_samples_file(const std::filesystem::path& path,
                                                         std::size_t line, const std::string& key) {
    std::ifstream in(path);
    if (!in) throw ConfigError(line, key, "cannot open samples file '" + path.string() + "'");
    std::vector<std::pair<double, double>> out;
    std::string row;
    std::size_t row_no = 0;
    while (std::getline(in, row)) {
        ++row_no;
        const auto text = trim(row);
        if (text.empty()) continue;
        const auto comma = text.find(',');
        const auto t = comma == std::string_view::npos ? std::nullopt : to_double(text.substr(0, comma));
        const auto w = comma == std::string_view::npos ? std::nullopt : to_double(text.substr(comma + 1));
        if (!t || !w) {
            if (out.empty() && row_no == 1) continue;  // header
            throw ConfigError(line, key, path.string() + ":" + std::to_string(row_no) +
                                             ": expected 'time,power'");
        }
        out.emplace_back(*t, *w);
    }
    return out;
}

PumpWaveform parse_pump(const Document& doc, const std::filesystem::path& base_dir) {
    const std::string kind = doc.text("pump.kind").value_or("trapezoidal");
    PumpWaveform pump;
    if (kind == "table") {
        const bool inline_samples = doc.has("pump.samples");
        const bool file_samples = doc.has("pump.samples_file");
        if (inline_samples == file_samples)
            throw ConfigError(doc.line_of("pump.kind"), "pump.samples",
                              "table pump needs exactly one of pump.samples, pump.samples_file");
        for (const char* unused : {"pump.peak_power", "pump.width", "pump.rise_time", "pump.start_time"})
            if (doc.has(unused))
                throw ConfigError(doc.line_of(unused), unused, "not used by a table pump");
        if (inline_samples) {
            pump = PumpWaveform::table(
                parse_samples(*doc.text("pump.samples"), doc.line_of("pump.samples"), "pump.samples"));
        } else {
            std::filesystem::path path = *doc.text("pump.samples_file");
            if (path.is_relative()) path = base_dir / path;
            pump = PumpWaveform::table(
                read_samples_file(path, doc.line_of("pump.samples_file"), "pump.samples_file"));
        }
    } else if (kind == "rectangular" || kind == "trapezoidal") {
        for (const char* unused : {"pump.samples", "pump.samples_file"})
            if (doc.has(unused))
                throw ConfigError(doc.line_of(unused), unused, "only used by a table pump");
        const double peak = doc.number("pump.peak_power");
        const double width = doc.number("pump.width");
        const double start = doc.number("pump.start_time", 10e-9);
        if (kind == "rectangular") {
            if (doc.has("pump.rise_time") && doc.number("pump.rise_time") != 0)
                throw ConfigError(doc.line_of("pump.rise_time"), "pump.rise_time",
                                  "rectangular pump has rise_time = 0");
            pump = PumpWaveform::rectangular(peak, width, start);
        } else {
            pump = PumpWaveform::trapezoidal(peak, width, doc.number("pump.rise_time", 3e-9), start);
        }
    } else {
        throw ConfigError(doc.line_of("pump.kind"), "pump.kind",
                          "expected rectangular, trapezoidal or table, got '" + kind + "'");
    }
    try {
        validate(pump);
    } catch (const InvalidArgument& e) {
        const std::string key = doc.has("pump.kind") ? "pump.kind" : "pump.peak_power";
        throw ConfigError(doc.line_of(key), "pump", e.what());
    }
    return pump;
}

std::vector<double> parse_powers(const Document& doc) {
    std::vector<double> powers;
    if (doc.has("sweep.powers")) {
        for (const char* other : {"sweep.min", "sweep.max", "sweep.points"})
            if (doc.has(other))
                throw ConfigError(doc.line_of(other), other, "conflicts with sweep.powers");
        const std::string list = *doc.text("sweep.powers");
        const std::size_t line = doc.line_of("sweep.powers");
        std::size_t pos = 0;
        while (pos <= list.size()) {
            auto end = list.find(',', pos);
            if (end == std::string::npos) end = list.size();
            const auto v = to_double(std::string_view(list).substr(pos, end - pos));
            if (!v) throw ConfigError(line, "sweep.powers", "not a number list: '" + list + "'");
            powers.push_back(*v);
            pos = end + 1;
        }
    } else {
        const double lo = doc.number("sweep.min");
        const double hi = doc.number("sweep.max");
        const double points = doc.number("sweep.points");
        if (!(points >= 1) || points != std::floor(points))
            throw ConfigError(doc.line_of("sweep.points"), "sweep.points", "must be an integer >= 1");
        if (!(hi >= lo))
            throw ConfigError(doc.line_of("sweep.max"), "sweep.max", "must be >= sweep.min");
        const auto n = static_cast<std::size_t>(points);
        for (std::size_t i = 0; i < n; ++i)
            powers.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    for (const double w : powers)
        if (!(w >= 0) || !std::isfinite(w))
            throw ConfigError(doc.line_of(doc.has("sweep.powers") ? "sweep.powers" : "sweep.min"),
                              "sweep.powers", "powers must be finite and >= 0");
    return powers;
}

ScanSpec parse_scan(const Document& doc, const CavityParamsd& params, const PumpWaveform& pulse) {
    double rate = 0;
    if (doc.has("scan.rate")) {
        for (const char* other : {"scan.traverse_time", "scan.finesse_s"})
            if (doc.has(other)) throw ConfigError(doc.line_of(other), other, "conflicts with scan.rate");
        rate = doc.number("scan.rate");
    } else {
        const double traverse = doc.number("scan.traverse_time", 20e-6);
        const double finesse = doc.number("scan.finesse_s", 28.3);
        if (!(traverse > 0)) throw ConfigError(doc.line_of("scan.traverse_time"), "scan.traverse_time", "must be > 0");
        if (!(finesse > 0)) throw ConfigError(doc.line_of("scan.finesse_s"), "scan.finesse_s", "must be > 0");
        rate = bandwidth_scan_rate(params.lambda_s, finesse, traverse);
    }
    const double duration = doc.number("scan.duration");
    const double period = doc.number("scan.period");

    try {
        if (doc.has("scan.crossing_phi_d")) {
            for (const char* other : {"scan.phi_s0", "scan.phi_d0"})
                if (doc.has(other))
                    throw ConfigError(doc.line_of(other), other, "conflicts with scan.crossing_phi_d");
            return centered_scan(params, rate, duration, period, pulse, doc.number("scan.crossing_phi_d"));
        }
        ScanSpec spec;
        spec.scan_rate = rate;
        spec.duration = duration;
        spec.pump_period = period;
        spec.pulse = pulse;
        spec.phi_s0 = doc.number("scan.phi_s0", 0.0);
        spec.phi_d0 = doc.number("scan.phi_d0", 0.0);
        validate(spec);
        return spec;
    } catch (const InvalidArgument& e) {
        const auto sections = doc.sections();
        const auto it = sections.find("scan");
        throw ConfigError(it == sections.end() ? 0 : it->second.first, "scan", e.what());
    }
}

LabObservables parse_lab(const Document& doc) {
    LabObservables lab;
    lab.finesse_s = doc.number("calib.finesse_s");
    lab.finesse_d = doc.number("calib.finesse_d");
    lab.mirror_power_reflectivity = doc.number("calib.reflectivity");
    lab.depletion_fraction = doc.number("calib.depletion");
    lab.depletion_pump_power = doc.number("calib.depletion_pump_power");
    lab.mirror_spacing = doc.number("calib.mirror_spacing", lab.mirror_spacing);
    lab.crystal_length = doc.number("calib.crystal_length", lab.crystal_length);
    lab.crystal_index = doc.number("calib.crystal_index", lab.crystal_index);
    try {
        validate(lab);
    } catch (const InvalidArgument& e) {
        static const std::map<std::string, std::string> key_of{
            {"finesse_s", "calib.finesse_s"},
            {"finesse_d", "calib.finesse_d"},
            {"mirror_power_reflectivity", "calib.reflectivity"},
            {"depletion_fraction", "calib.depletion"},
            {"depletion_pump_power", "calib.depletion_pump_power"},
            {"mirror_spacing", "calib.mirror_spacing"},
            {"crystal_length", "calib.crystal_length"},
            {"crystal_index", "calib.crystal_index"},
        };
        const std::string message = e.what();
        const auto it = key_of.find(message.substr(0, message.find(' ')));
        const std::string key = it == key_of.end() ? "calib" : it->second;
        throw ConfigError(doc.line_of(key), key, message);
    }
    return lab;
}

}  // namespace

ConfigError::ConfigError(std::size_t line, std::string key, const std::string& message)
    : std::runtime_error((line ? "line " + std::to_string(line) + ": " : std::string()) + key +
                         ": " + message),
      line_(line),
      key_(std::move(key)) {}

std::string_view to_string(Scenario scenario) {
    switch (scenario) {
    case Scenario::Steady: return "steady";
    case Scenario::Pulse: return "pulse";
    case Scenario::Scan: return "scan";
    case Scenario::SweepPower: return "sweep-power";
    case Scenario::Calibrate: return "calibrate";
    }
    return "steady";
}

std::optional<Scenario> scenario_from_string(std::string_view name) {
    for (Scenario s : {Scenario::Steady, Scenario::Pulse, Scenario::Scan, Scenario::SweepPower,
                       Scenario::Calibrate})
        if (to_string(s) == name) return s;
    return std::nullopt;
}

RunConfig parse_config(std::string_view text, std::optional<Scenario> scenario,
                       const std::filesystem::path& base_dir) {
    const Document doc(text);
    check_keys(doc);

    RunConfig config;
    if (const Entry* e = doc.find("scenario")) {
        const auto named = scenario_from_string(e->value);
        if (!named) throw ConfigError(e->line, "scenario", "unknown scenario '" + e->value + "'");
        if (scenario && *scenario != *named)
            throw ConfigError(e->line, "scenario",
                              "file says '" + e->value + "' but '" + std::string(to_string(*scenario)) +
                                  "' was requested");
        config.scenario = *named;
    } else if (scenario) {
        config.scenario = *scenario;
    }

    const auto allowed = allowed_sections(config.scenario);
    for (const auto& [section, first] : doc.sections()) {
        if (!allowed.count(section))
            throw ConfigError(first.first, first.second,
                              "extraneous section '" + section + ".' for scenario " +
                                  std::string(to_string(config.scenario)));
    }

    switch (config.scenario) {
    case Scenario::Steady:
        config.params = parse_params(doc);
        for (const auto& [key, entry] : doc.entries())
            if (key.rfind("pump.", 0) == 0 && key != "pump.peak_power")
                throw ConfigError(entry.line, key, "not used by scenario steady");
        config.pump.peak_power = doc.number("pump.peak_power", 0.0);
        if (!(config.pump.peak_power >= 0) || !std::isfinite(config.pump.peak_power))
            throw ConfigError(doc.line_of("pump.peak_power"), "pump.peak_power", "must be finite and >= 0");
        break;
    case Scenario::Pulse:
        config.params = parse_params(doc);
        config.pump = parse_pump(doc, base_dir);
        config.duration = doc.number("pump.duration");
        if (!(config.duration >= config.pump.support_end()) || !std::isfinite(config.duration))
            throw ConfigError(doc.line_of("pump.duration"), "pump.duration",
                              "must cover the pump pulse (ends at " +
                                  format_number(config.pump.support_end()) + " s)");
        break;
    case Scenario::Scan:
        config.params = parse_params(doc);
        if (doc.has("pump.duration"))
            throw ConfigError(doc.line_of("pump.duration"), "pump.duration",
                              "not used by scenario scan (use scan.duration)");
        config.pump = parse_pump(doc, base_dir);
        config.scan = parse_scan(doc, config.params, config.pump);
        break;
    case Scenario::SweepPower:
        config.params = parse_params(doc);
        config.powers = parse_powers(doc);
        break;
    case Scenario::Calibrate:
        config.lab = parse_lab(doc);
        config.calib_lambda_s = doc.number("calib.lambda_s", config.calib_lambda_s);
        config.calib_lambda_d = doc.number("calib.lambda_d", config.calib_lambda_d);
        if (!(config.calib_lambda_s > 0) || !(config.calib_lambda_d > config.calib_lambda_s))
            throw ConfigError(doc.line_of("calib.lambda_d"), "calib.lambda_d",
                              "need lambda_d > lambda_s > 0");
        break;
    }
    config.output_path = doc.text("output.path").value_or("");
    return config;
}

std::string emit_params(const CavityParamsd& p) {
    std::ostringstream os;
    os << "params.r_s = " << emit_number(p.r_s) << '\n'
       << "params.t_s = " << emit_number(p.t_s) << '\n'
       << "params.eta_s = " << emit_number(p.eta_s) << '\n'
       << "params.rho_d = " << emit_number(p.rho_d) << '\n'
       << "params.phi_s = " << emit_number(p.phi_s) << '\n'
       << "params.phi_d = " << emit_number(p.phi_d) << '\n'
       << "params.g = " << emit_number(p.g) << '\n'
       << "params.lambda_s = " << emit_number(p.lambda_s) << '\n'
       << "params.lambda_d = " << emit_number(p.lambda_d) << '\n'
       << "params.dt = " << emit_number(p.dt) << '\n';
    return os.str();
}

namespace {

void emit_pump(std::ostream& os, const PumpWaveform& pump) {
    switch (pump.kind) {
    case PumpKind::Table:
        os << "pump.kind = table\npump.samples = ";
        for (std::size_t i = 0; i < pump.samples.size(); ++i)
            os << (i ? ", " : "") << emit_number(pump.samples[i].first) << ':'
               << emit_number(pump.samples[i].second);
        os << '\n';
        return;
    case PumpKind::Rectangular: os << "pump.kind = rectangular\n"; break;
    case PumpKind::Trapezoidal: os << "pump.kind = trapezoidal\n"; break;
    }
    os << "pump.peak_power = " << emit_number(pump.peak_power) << '\n'
       << "pump.width = " << emit_number(pump.width) << '\n'
       << "pump.rise_time = " << emit_number(pump.rise_time) << '\n'
       << "pump.start_time = " << emit_number(pump.start_time) << '\n';
}

}  // namespace

std::string emit_config(const RunConfig& c) {
    std::ostringstream os;
    os << "scenario = " << to_string(c.scenario) << '\n';
    switch (c.scenario) {
    case Scenario::Steady:
        os << emit_params(c.params) << "pump.peak_power = " << emit_number(c.pump.peak_power) << '\n';
        break;
    case Scenario::Pulse:
        os << emit_params(c.params);
        emit_pump(os, c.pump);
        os << "pump.duration = " << emit_number(c.duration) << '\n';
        break;
    case Scenario::Scan:
        os << emit_params(c.params);
        emit_pump(os, c.pump);
        os << "scan.rate = " << emit_number(c.scan.scan_rate) << '\n'
           << "scan.duration = " << emit_number(c.scan.duration) << '\n'
           << "scan.period = " << emit_number(c.scan.pump_period) << '\n'
           << "scan.phi_s0 = " << emit_number(c.scan.phi_s0) << '\n'
           << "scan.phi_d0 = " << emit_number(c.scan.phi_d0) << '\n';
        break;
    case Scenario::SweepPower:
        os << emit_params(c.params) << "sweep.powers = ";
        for (std::size_t i = 0; i < c.powers.size(); ++i) os << (i ? ", " : "") << emit_number(c.powers[i]);
        os << '\n';
        break;
    case Scenario::Calibrate:
        os << "calib.finesse_s = " << emit_number(c.lab.finesse_s) << '\n'
           << "calib.finesse_d = " << emit_number(c.lab.finesse_d) << '\n'
           << "calib.reflectivity = " << emit_number(c.lab.mirror_power_reflectivity) << '\n'
           << "calib.depletion = " << emit_number(c.lab.depletion_fraction) << '\n'
           << "calib.depletion_pump_power = " << emit_number(c.lab.depletion_pump_power) << '\n'
           << "calib.mirror_spacing = " << emit_number(c.lab.mirror_spacing) << '\n'
           << "calib.crystal_length = " << emit_number(c.lab.crystal_length) << '\n'
           << "calib.crystal_index = " << emit_number(c.lab.crystal_index) << '\n'
           << "calib.lambda_s = " << emit_number(c.calib_lambda_s) << '\n'
           << "calib.lambda_d = " << emit_number(c.calib_lambda_d) << '\n';
        break;
    }
    if (!c.output_path.empty()) os << "output.path = " << c.output_path << '\n';
    return os.str();
}

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

void write_trace_csv(std::ostream& os, const SimulationTrace& trace) {
    os << "time_s,pump_W,p_transmitted,p_reflected,p_converted,phi_s_rad,phi_d_rad\n";
    for (const auto& r : trace.rows) {
        os << format_number(r.time) << ',' << format_number(r.pump) << ',' << format_number(r.p_t)
           << ',' << format_number(r.p_r) << ',' << format_number(r.p_conv) << ','
           << format_number(r.phi_s) << ',' << format_number(r.phi_d) << '\n';
    }
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint<double>>& points) {
    os << "pump_W,rel_transmission\n";
    for (const auto& p : points) {
        os << format_number(p.pump_power) << ','
           << (p.rel_transmission ? format_number(*p.rel_transmission) : std::string("nan")) << '\n';
    }
}

}  // namespace zeno
