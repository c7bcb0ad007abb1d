#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef ZENO_CLI_PATH
#error "ZENO_CLI_PATH must be defined"
#endif

namespace fs = std::filesystem;

namespace {

struct Result {
    int status = -1;
    std::string output;
};

Result run_cli(const std::string& args) {
    const std::string command = std::string("\"") + ZENO_CLI_PATH + "\" " + args + " 2>&1";
    Result result;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::fgets(buf, sizeof buf, pipe)) result.output += buf;
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path scratch() {
    const auto dir = fs::temp_directory_path() / "zeno_cli_test";
    fs::create_directories(dir);
    return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
    const auto path = scratch() / name;
    std::ofstream(path) << text;
    return path;
}

const char* kParams =
    "params.r_s = 0.968\n"
    "params.t_s = 0.250\n"
    "params.eta_s = 0.977\n"
    "params.rho_d = 0.989\n"
    "params.g = 0.022\n";

}  // namespace

TEST_CASE("steady run prints the switched transmission") {
    const auto cfg = write_file("steady.cfg", std::string(kParams) + "pump.peak_power = 17\n");
    const auto r = run_cli("steady --config " + cfg.string());
    CHECK(r.status == 0);
    CHECK(r.output.find("steady") != std::string::npos);
    CHECK(r.output.find("|t|^2=0.00223") != std::string::npos);
}

TEST_CASE("power sweep writes one row per grid point") {
    const auto cfg = write_file("sweep.cfg", std::string(kParams) +
                                                 "sweep.min = 0\nsweep.max = 100\nsweep.points = 101\n");
    const auto out = scratch() / "sweep.csv";
    const auto r = run_cli("sweep-power --config " + cfg.string() + " --output " + out.string());
    CHECK(r.status == 0);
    std::istringstream csv(slurp(out));
    std::string line;
    std::getline(csv, line);
    CHECK(line == "pump_W,rel_transmission");
    int rows = 0;
    double previous = 2;
    while (std::getline(csv, line)) {
        const double power = std::stod(line.substr(0, line.find(',')));
        const double rel = std::stod(line.substr(line.find(',') + 1));
        if (rows == 0) CHECK(rel == doctest::Approx(1.0));
        if (power <= 45) {
            CHECK(rel <= previous);
            previous = rel;
        }
        ++rows;
    }
    CHECK(rows == 101);
}

TEST_CASE("calibrate writes a reusable parameter file") {
    const auto cfg = write_file("calib.cfg",
                                "calib.finesse_s = 28.3\ncalib.finesse_d = 276\ncalib.reflectivity = 0.938\n"
                                "calib.depletion = 0.0065\ncalib.depletion_pump_power = 13\n");
    const auto out = scratch() / "derived.cfg";
    const auto r = run_cli("calibrate --config " + cfg.string() + " --output " + out.string());
    REQUIRE(r.status == 0);
    const std::string derived = slurp(out);
    CHECK(derived.find("params.r_s = 0.968") != std::string::npos);
    CHECK(derived.find("params.rho_d = 0.98868") != std::string::npos);

    // the derived file drives a steady run unchanged
    const auto again = run_cli("steady --config " + out.string());
    CHECK(again.status == 0);
}

TEST_CASE("pulse runs are deterministic") {
    const auto cfg = write_file("pulse.cfg", std::string(kParams) +
                                                 "pump.peak_power = 17\npump.width = 20e-9\n"
                                                 "pump.start_time = 30e-9\npump.duration = 120e-9\n");
    const auto a = scratch() / "a.csv";
    const auto b = scratch() / "b.csv";
    REQUIRE(run_cli("pulse --config " + cfg.string() + " --output " + a.string()).status == 0);
    REQUIRE(run_cli("pulse --config " + cfg.string() + " --output " + b.string()).status == 0);
    const std::string first = slurp(a);
    CHECK(!first.empty());
    CHECK(first == slurp(b));
    CHECK(first.rfind("time_s,pump_W,p_transmitted,p_reflected,p_converted,phi_s_rad,phi_d_rad\n", 0) == 0);
}

TEST_CASE("exit codes") {
    const auto bad = write_file("bad.cfg", "params.r_s = 1.2\n");
    const auto r = run_cli("steady --config " + bad.string());
    CHECK(r.status == 1);
    CHECK(r.output.find("params.") != std::string::npos);

    CHECK(run_cli("steady --config " + (scratch() / "missing.cfg").string()).status == 1);

    const auto singular = write_file("singular.cfg",
                                     "params.r_s = 1\nparams.t_s = 0\nparams.eta_s = 1\n"
                                     "params.rho_d = 0.5\nparams.g = 0.022\n");
    const auto s = run_cli("steady --config " + singular.string());
    CHECK(s.status == 2);

    CHECK(run_cli("wobble --config " + bad.string()).status != 0);
}
