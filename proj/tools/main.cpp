// ntnsim command line: run | sweep | validate over key = value config files.
#include "ntn/errors.hpp"
#include "ntn/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumeric = 2;

ntn::RunConfig load(const std::string& path) {
    if (path.empty()) return ntn::RunConfig{}; // all defaults
    return ntn::parse_config(path);
}

void apply_overrides(ntn::RunConfig& cfg, const std::string& mode, bool seed_set,
                     std::uint64_t seed) {
    if (!mode.empty()) {
        if (mode == "analytic") cfg.mode = ntn::RunMode::Analytic;
        else if (mode == "montecarlo") cfg.mode = ntn::RunMode::MonteCarlo;
        else if (mode == "both") cfg.mode = ntn::RunMode::Both;
        else throw std::invalid_argument("--mode must be analytic, montecarlo or both");
    }
    if (seed_set) cfg.seed = seed;
}

int write_results(const ntn::RunConfig& cfg, const std::string& out_path) {
    const auto rows = ntn::run(cfg);
    if (out_path.empty() || out_path == "-") {
        ntn::emit_csv(std::cout, cfg, rows);
    } else {
        std::ofstream f(out_path);
        if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
        ntn::emit_csv(f, cfg, rows);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outage analysis for a clustered aerial uplink sharing FDMA channels"};
    app.require_subcommand(1);

    std::string config_path, out_path, mode, sweep_param, sweep_values;
    std::uint64_t seed = 0;
    bool seed_set = false;

    auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* pos = sub->add_option("config", config_path, "config file (key = value lines)");
        if (config_required) pos->required()->check(CLI::ExistingFile);
        sub->add_option("--mode", mode, "override mode: analytic | montecarlo | both");
        sub->add_option("--seed", seed, "override RNG seed")->each([&](const std::string&) {
            seed_set = true;
        });
        sub->add_option("--out,-o", out_path, "output CSV path (default stdout)");
    };

    auto* cmd_run = app.add_subcommand("run", "evaluate the configured scenario");
    add_common(cmd_run, false);

    auto* cmd_sweep = app.add_subcommand("sweep", "evaluate over a parameter sweep");
    add_common(cmd_sweep, false);
    cmd_sweep->add_option("--param", sweep_param, "T | p_m | R1 | K | lambda1");
    cmd_sweep->add_option("--values", sweep_values, "comma-separated sweep values");

    auto* cmd_validate = app.add_subcommand("validate", "parse and validate a config file");
    cmd_validate->add_option("config", config_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e); // prints help or the parse error
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (cmd_validate->parsed()) {
            const auto cfg = ntn::parse_config(config_path);
            ntn::to_scenario(cfg); // throws with the full violation list
            std::cout << "OK: " << config_path << " is valid\n";
            return kExitOk;
        }

        ntn::RunConfig cfg = load(config_path);
        apply_overrides(cfg, mode, seed_set, seed);

        if (cmd_sweep->parsed()) {
            if (!sweep_param.empty()) cfg.sweep_param = sweep_param;
            if (!sweep_values.empty()) {
                cfg.sweep_values.clear();
                std::stringstream ss(sweep_values);
                std::string item;
                while (std::getline(ss, item, ','))
                    cfg.sweep_values.push_back(std::stod(item));
            }
            if (cfg.sweep_param.empty())
                throw std::invalid_argument("sweep requires --param (or sweep_param in the config)");
            if (cfg.sweep_values.empty())
                throw std::invalid_argument("sweep requires --values (or sweep_values in the config)");
        }
        return write_results(cfg, out_path);
    } catch (const ntn::numeric_error& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
