#include "ntn/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ntn {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

[[noreturn]] void fail_at(const std::string& origin, int line, const std::string& what) {
    throw std::invalid_argument(origin + ":" + std::to_string(line) + ": " + what);
}

double parse_double(const std::string& origin, int line, const std::string& key,
                    const std::string& v) {
    try {
        std::size_t used = 0;
        const double d = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        fail_at(origin, line, "key '" + key + "': cannot parse '" + v + "' as a number");
    }
}

std::int64_t parse_int(const std::string& origin, int line, const std::string& key,
                       const std::string& v) {
    try {
        std::size_t used = 0;
        const std::int64_t d = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument("trailing characters");
        return d;
    } catch (const std::exception&) {
        fail_at(origin, line, "key '" + key + "': cannot parse '" + v + "' as an integer");
    }
}

std::vector<double> parse_double_list(const std::string& origin, int line, const std::string& key,
                                      const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) fail_at(origin, line, "key '" + key + "': empty list element");
        out.push_back(parse_double(origin, line, key, item));
    }
    if (out.empty()) fail_at(origin, line, "key '" + key + "': empty list");
    return out;
}

} // namespace

const std::vector<std::string>& assumed_default_keys() {
    static const std::vector<std::string> keys = {
        "gt_dbi", "gt_side_dbi", "gr_dbi", "theta_rad", "n1",
        "k_channels", "cbar", "pm_dbw", "target_group"};
    return keys;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double km_to_m(double km) { return km * 1000.0; }

RunConfig parse_config_text(const std::string& text, const std::string& origin) {
    RunConfig cfg;
    using Setter = std::function<void(const std::string&, int, const std::string&)>;
    const std::map<std::string, Setter> setters = {
        {"mode",
         [&](const std::string& o, int l, const std::string& v) {
             const std::string m = lower(v);
             if (m == "analytic") cfg.mode = RunMode::Analytic;
             else if (m == "montecarlo") cfg.mode = RunMode::MonteCarlo;
             else if (m == "both") cfg.mode = RunMode::Both;
             else fail_at(o, l, "mode must be analytic, montecarlo or both (got '" + v + "')");
         }},
        {"d0_km", [&](const std::string& o, int l, const std::string& v) { cfg.d0_km = parse_double(o, l, "d0_km", v); }},
        {"r1_km", [&](const std::string& o, int l, const std::string& v) { cfg.r1_km = parse_double(o, l, "r1_km", v); }},
        {"dmin_km", [&](const std::string& o, int l, const std::string& v) { cfg.dmin_km = parse_double(o, l, "dmin_km", v); }},
        {"lambda1", [&](const std::string& o, int l, const std::string& v) { cfg.lambda1 = parse_double(o, l, "lambda1", v); }},
        {"cbar", [&](const std::string& o, int l, const std::string& v) { cfg.cbar = parse_double(o, l, "cbar", v); }},
        {"n1", [&](const std::string& o, int l, const std::string& v) { cfg.n1 = static_cast<int>(parse_int(o, l, "n1", v)); }},
        {"k_channels", [&](const std::string& o, int l, const std::string& v) { cfg.k_channels = static_cast<int>(parse_int(o, l, "k_channels", v)); }},
        {"pm_dbw", [&](const std::string& o, int l, const std::string& v) { cfg.pm_dbw = parse_double(o, l, "pm_dbw", v); }},
        {"p1_dbw", [&](const std::string& o, int l, const std::string& v) { cfg.p1_dbw = parse_double(o, l, "p1_dbw", v); }},
        {"p2_dbw", [&](const std::string& o, int l, const std::string& v) { cfg.p2_dbw = parse_double(o, l, "p2_dbw", v); }},
        {"alpha", [&](const std::string& o, int l, const std::string& v) { cfg.alpha = parse_double(o, l, "alpha", v); }},
        {"t_db", [&](const std::string& o, int l, const std::string& v) { cfg.t_db = parse_double(o, l, "t_db", v); }},
        {"noise_dbm", [&](const std::string& o, int l, const std::string& v) { cfg.noise_dbm = parse_double(o, l, "noise_dbm", v); }},
        {"bandwidth_hz", [&](const std::string& o, int l, const std::string& v) { cfg.bandwidth_hz = parse_double(o, l, "bandwidth_hz", v); }},
        {"sr_c", [&](const std::string& o, int l, const std::string& v) { cfg.sr_c = parse_double(o, l, "sr_c", v); }},
        {"sr_q", [&](const std::string& o, int l, const std::string& v) { cfg.sr_q = parse_double(o, l, "sr_q", v); }},
        {"sr_omega", [&](const std::string& o, int l, const std::string& v) { cfg.sr_omega = parse_double(o, l, "sr_omega", v); }},
        {"gt_dbi", [&](const std::string& o, int l, const std::string& v) { cfg.gt_dbi = parse_double(o, l, "gt_dbi", v); }},
        {"gt_side_dbi", [&](const std::string& o, int l, const std::string& v) { cfg.gt_side_dbi = parse_double(o, l, "gt_side_dbi", v); }},
        {"gr_dbi", [&](const std::string& o, int l, const std::string& v) { cfg.gr_dbi = parse_double(o, l, "gr_dbi", v); }},
        {"theta_rad", [&](const std::string& o, int l, const std::string& v) { cfg.theta_rad = parse_double(o, l, "theta_rad", v); }},
        {"target_group",
         [&](const std::string& o, int l, const std::string& v) {
             const std::string g = lower(v);
             if (g != "a1" && g != "a2") fail_at(o, l, "target_group must be A1 or A2");
             cfg.target_group = g == "a1" ? "A1" : "A2";
         }},
        {"n_iter", [&](const std::string& o, int l, const std::string& v) { cfg.n_iter = parse_int(o, l, "n_iter", v); }},
        {"seed", [&](const std::string& o, int l, const std::string& v) { cfg.seed = static_cast<std::uint64_t>(parse_int(o, l, "seed", v)); }},
        {"series_kmax", [&](const std::string& o, int l, const std::string& v) { cfg.series_kmax = static_cast<int>(parse_int(o, l, "series_kmax", v)); }},
        {"series_tol", [&](const std::string& o, int l, const std::string& v) { cfg.series_tol = parse_double(o, l, "series_tol", v); }},
        {"distance_mode",
         [&](const std::string& o, int l, const std::string& v) {
             const std::string m = lower(v);
             if (m != "common-d0" && m != "exact-geometry")
                 fail_at(o, l, "distance_mode must be common-d0 or exact-geometry");
             cfg.distance_mode = m;
         }},
        {"a2_policy",
         [&](const std::string& o, int l, const std::string& v) {
             const std::string m = lower(v);
             if (m != "all-on-channel" && m != "per-cluster-share")
                 fail_at(o, l, "a2_policy must be all-on-channel or per-cluster-share");
             cfg.a2_policy = m;
         }},
        {"satellite_offset_km", [&](const std::string& o, int l, const std::string& v) { cfg.satellite_offset_km = parse_double(o, l, "satellite_offset_km", v); }},
        {"sweep_param", [&](const std::string& o, int l, const std::string& v) {
             try {
                 parse_sweep_param(v);
             } catch (const std::invalid_argument& e) {
                 fail_at(o, l, e.what());
             }
             cfg.sweep_param = v;
         }},
        {"sweep_values", [&](const std::string& o, int l, const std::string& v) { cfg.sweep_values = parse_double_list(o, l, "sweep_values", v); }},
    };

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail_at(origin, line_no, "expected 'key = value', got '" + line + "'");
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail_at(origin, line_no, "missing key before '='");
        if (value.empty()) fail_at(origin, line_no, "key '" + key + "': missing value");
        const auto it = setters.find(key);
        if (it == setters.end()) fail_at(origin, line_no, "unknown key '" + key + "'");
        it->second(origin, line_no, value);
    }
    return cfg;
}

RunConfig parse_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str(), path);
}

Scenario to_scenario(const RunConfig& cfg) {
    std::vector<std::string> problems;
    if (!(cfg.sr_c > 0.0)) problems.push_back("sr_c must be > 0");
    if (!(cfg.sr_q > 0.0)) problems.push_back("sr_q must be > 0");
    if (!(cfg.sr_omega >= 0.0)) problems.push_back("sr_omega must be >= 0");
    if (!(cfg.bandwidth_hz > 0.0)) problems.push_back("bandwidth_hz must be > 0");
    if (cfg.n_iter < 1) problems.push_back("n_iter must be >= 1");
    if (cfg.series_kmax < 0) problems.push_back("series_kmax must be >= 0");
    if (!(cfg.series_tol > 0.0)) problems.push_back("series_tol must be > 0");
    if (!problems.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw std::invalid_argument(msg);
    }

    Scenario s{
        .sr = SRParams(cfg.sr_c, cfg.sr_q, cfg.sr_omega),
        .beam = BeamPattern{db_to_linear(cfg.gt_dbi), db_to_linear(cfg.gt_side_dbi),
                            db_to_linear(cfg.gr_dbi), cfg.theta_rad},
        .topology = MhccpConfig{cfg.lambda1, km_to_m(cfg.dmin_km), cfg.cbar,
                                Ball{{0.0, 0.0, 0.0}, km_to_m(cfg.r1_km)}},
        .n1_total = cfg.n1,
        .k_channels = cfg.k_channels,
        .p_target_w = db_to_linear(cfg.pm_dbw),
        .p1_w = db_to_linear(cfg.p1_dbw),
        .p2_w = db_to_linear(cfg.p2_dbw),
        .alpha = cfg.alpha,
        .d0_m = km_to_m(cfg.d0_km),
        .noise_w = dbm_to_watt(cfg.noise_dbm) * cfg.bandwidth_hz,
        .target_group = cfg.target_group == "A2" ? TargetGroup::A2 : TargetGroup::A1,
    };
    auto scn_problems = validate(s);
    if (!scn_problems.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& p : scn_problems) msg += "\n  - " + p;
        throw std::invalid_argument(msg);
    }
    return s;
}

SnapshotOptions to_snapshot_options(const RunConfig& cfg) {
    SnapshotOptions opts;
    opts.distance_mode = cfg.distance_mode == "exact-geometry" ? DistanceMode::ExactGeometry
                                                               : DistanceMode::CommonD0;
    opts.a2_channel_policy = cfg.a2_policy == "per-cluster-share"
                                 ? A2ChannelPolicy::PerClusterShare
                                 : A2ChannelPolicy::AllOnChannel;
    opts.satellite_offset_m = km_to_m(cfg.satellite_offset_km);
    return opts;
}

SweepParam parse_sweep_param(const std::string& name) {
    const std::string n = lower(name);
    if (n == "t") return SweepParam::Threshold;
    if (n == "p_m" || n == "pm") return SweepParam::TargetPower;
    if (n == "r1") return SweepParam::RegionRadius;
    if (n == "k") return SweepParam::Channels;
    if (n == "lambda1") return SweepParam::CandidateDensity;
    throw std::invalid_argument("unknown sweep parameter '" + name +
                                "' (expected T, p_m, R1, K or lambda1)");
}

std::vector<std::string> describe(const RunConfig& cfg) {
    auto fmt = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return std::string(buf);
    };
    std::vector<std::string> out;
    const char* mode = cfg.mode == RunMode::Analytic ? "analytic"
                       : cfg.mode == RunMode::MonteCarlo ? "montecarlo" : "both";
    out.push_back("mode = " + std::string(mode));
    out.push_back("d0_km = " + fmt(cfg.d0_km));
    out.push_back("r1_km = " + fmt(cfg.r1_km));
    out.push_back("dmin_km = " + fmt(cfg.dmin_km));
    out.push_back("lambda1 = " + fmt(cfg.lambda1));
    out.push_back("cbar = " + fmt(cfg.cbar));
    out.push_back("n1 = " + std::to_string(cfg.n1));
    out.push_back("k_channels = " + std::to_string(cfg.k_channels));
    out.push_back("pm_dbw = " + fmt(cfg.pm_dbw));
    out.push_back("p1_dbw = " + fmt(cfg.p1_dbw));
    out.push_back("p2_dbw = " + fmt(cfg.p2_dbw));
    out.push_back("alpha = " + fmt(cfg.alpha));
    out.push_back("t_db = " + fmt(cfg.t_db));
    out.push_back("noise_dbm = " + fmt(cfg.noise_dbm));
    out.push_back("bandwidth_hz = " + fmt(cfg.bandwidth_hz));
    out.push_back("sr_c = " + fmt(cfg.sr_c));
    out.push_back("sr_q = " + fmt(cfg.sr_q));
    out.push_back("sr_omega = " + fmt(cfg.sr_omega));
    out.push_back("gt_dbi = " + fmt(cfg.gt_dbi));
    out.push_back("gt_side_dbi = " + fmt(cfg.gt_side_dbi));
    out.push_back("gr_dbi = " + fmt(cfg.gr_dbi));
    out.push_back("theta_rad = " + fmt(cfg.theta_rad));
    out.push_back("target_group = " + cfg.target_group);
    out.push_back("n_iter = " + std::to_string(cfg.n_iter));
    out.push_back("seed = " + std::to_string(cfg.seed));
    out.push_back("series_kmax = " + std::to_string(cfg.series_kmax));
    out.push_back("series_tol = " + fmt(cfg.series_tol));
    out.push_back("distance_mode = " + cfg.distance_mode);
    out.push_back("a2_policy = " + cfg.a2_policy);
    out.push_back("satellite_offset_km = " + fmt(cfg.satellite_offset_km));
    if (!cfg.sweep_param.empty()) {
        std::string vals;
        for (std::size_t i = 0; i < cfg.sweep_values.size(); ++i)
            vals += (i ? "," : "") + fmt(cfg.sweep_values[i]);
        out.push_back("sweep_param = " + cfg.sweep_param);
        out.push_back("sweep_values = " + vals);
    }
    std::string assumed = "assumed-default keys:";
    for (const auto& k : assumed_default_keys()) assumed += " " + k;
    out.push_back(assumed);
    return out;
}

} // namespace ntn
