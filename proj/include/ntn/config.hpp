#pragma once

#include "ntn/montecarlo.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ntn {

enum class RunMode { Analytic, MonteCarlo, Both };

// Flat key = value run description in field units: powers dBW, noise dBm,
// threshold dB, antenna gains dBi, distances km, densities points/m^3.
// Conversion to SI/linear happens exactly once, in to_scenario().
struct RunConfig {
    RunMode mode = RunMode::Both;

    double d0_km = 300.0;
    double r1_km = 10.0;
    double dmin_km = 1.0;
    double lambda1 = 1e-11;
    double cbar = 5.0;        // assumed default, no published value
    int n1 = 40;              // assumed default
    int k_channels = 4;       // assumed default

    double pm_dbw = 20.0;     // assumed default (matches group-1 power)
    double p1_dbw = 20.0;
    double p2_dbw = 19.0;
    double alpha = 2.0;
    double t_db = -18.0;
    double noise_dbm = -160.0;
    double bandwidth_hz = 1.0; // optional multiplier on the noise power

    double sr_c = 0.158;
    double sr_q = 1.0;
    double sr_omega = 0.1;

    double gt_dbi = 10.0;      // assumed default
    double gt_side_dbi = -10.0; // assumed default
    double gr_dbi = 30.0;      // assumed default
    double theta_rad = 0.5235987755982988; // pi/6, assumed default

    std::string target_group = "A1"; // assumed default

    std::int64_t n_iter = 50000;
    std::uint64_t seed = 1;
    int series_kmax = 200;
    double series_tol = 1e-10;

    std::string distance_mode = "common-d0";
    std::string a2_policy = "all-on-channel";
    double satellite_offset_km = 0.0; // 0 -> use d0

    std::string sweep_param;          // empty, T, p_m, R1, K or lambda1
    std::vector<double> sweep_values; // field units of the swept key
};

// Keys whose defaults are modelling assumptions rather than published values;
// echoed into the output metadata so downstream plots are honest about them.
const std::vector<std::string>& assumed_default_keys();

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_watt(double dbm);
double km_to_m(double km);

// Parses a config file; every unset key keeps its default. Throws
// std::invalid_argument with file/line diagnostics on malformed input.
RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text, const std::string& origin = "<string>");

// Unit conversion + invariant check; throws std::invalid_argument listing
// every violated invariant.
Scenario to_scenario(const RunConfig& cfg);

SnapshotOptions to_snapshot_options(const RunConfig& cfg);
SweepParam parse_sweep_param(const std::string& name);

// Effective-config echo (deterministic order) used for the CSV metadata block.
std::vector<std::string> describe(const RunConfig& cfg);

} // namespace ntn
