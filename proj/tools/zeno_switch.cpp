// Command-line front end: zeno_switch <scenario> --config <path> [--output <path>]

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zeno/config.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Quantum-Zeno switch cavity simulator"};
    std::string scenario_name;
    std::string config_path;
    std::string output_path;
    app.add_option("scenario", scenario_name, "steady | pulse | scan | sweep-power | calibrate")
        ->required();
    app.add_option("--config", config_path, "key = value configuration file")->required();
    app.add_option("--output", output_path, "output file (overrides output.path)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : zeno::kExitConfig;
    }

    const auto scenario = zeno::scenario_from_string(scenario_name);
    if (!scenario) {
        std::cerr << "unknown scenario '" << scenario_name << "'\n";
        return zeno::kExitConfig;
    }

    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        std::cerr << "cannot read config '" << config_path << "'\n";
        return zeno::kExitConfig;
    }
    std::ostringstream text;
    text << in.rdbuf();

    zeno::RunConfig config;
    try {
        config = zeno::parse_config(text.str(), *scenario,
                                    std::filesystem::path(config_path).parent_path());
    } catch (const zeno::ConfigError& e) {
        std::cerr << config_path << ": " << e.what() << '\n';
        return zeno::kExitConfig;
    }
    if (!output_path.empty()) config.output_path = output_path;
    return zeno::run(config, std::cout, std::cerr);
}
