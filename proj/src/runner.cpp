#include "ntn/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ntn {

namespace {

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return std::string(buf);
}

// Field-unit sweep value -> the units to_scenario expects for that parameter.
RunConfig with_sweep_value(const RunConfig& cfg, SweepParam param, double value) {
    RunConfig out = cfg;
    switch (param) {
        case SweepParam::Threshold: out.t_db = value; break;
        case SweepParam::TargetPower: out.pm_dbw = value; break;
        case SweepParam::RegionRadius: out.r1_km = value; break;
        case SweepParam::Channels: {
            const double r = std::round(value);
            if (std::fabs(value - r) > 1e-9 || r < 1.0)
                throw std::invalid_argument("channel count must be a positive integer");
            out.k_channels = static_cast<int>(r);
            break;
        }
        case SweepParam::CandidateDensity: out.lambda1 = value; break;
    }
    return out;
}

} // namespace

std::vector<ResultRow> run(const RunConfig& cfg) {
    std::vector<RunConfig> points;
    if (cfg.sweep_param.empty()) {
        points.push_back(cfg);
    } else {
        const SweepParam param = parse_sweep_param(cfg.sweep_param);
        if (cfg.sweep_values.empty())
            throw std::invalid_argument("sweep_param set but sweep_values is empty");
        for (double v : cfg.sweep_values) points.push_back(with_sweep_value(cfg, param, v));
    }

    std::vector<ResultRow> rows;
    rows.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        const RunConfig& pt = points[i];
        const auto t0 = std::chrono::steady_clock::now();
        const Scenario scn = to_scenario(pt);
        const double threshold = db_to_linear(pt.t_db);

        ResultRow row;
        row.sweep_param = cfg.sweep_param;
        if (!cfg.sweep_param.empty()) row.sweep_value = cfg.sweep_values[i];
        if (cfg.mode != RunMode::MonteCarlo)
            row.p_out_analytic = outage_probability(
                scn, threshold, SeriesControl{pt.series_kmax, pt.series_tol});
        if (cfg.mode != RunMode::Analytic) {
            const OutageEstimate est = estimate_outage(scn, threshold, pt.n_iter, pt.seed,
                                                       to_snapshot_options(pt));
            row.p_out_mc = est.p_hat;
            row.mc_ci95 = est.half_width_95;
        }
        row.runtime_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        rows.push_back(row);
    }
    return rows;
}

void emit_csv(std::ostream& os, const RunConfig& cfg, const std::vector<ResultRow>& rows) {
    for (const auto& line : describe(cfg)) os << "# " << line << "\n";
    os << "sweep_param,sweep_value,p_out_analytic,p_out_mc,mc_ci95,runtime_ms\n";
    for (const auto& r : rows) {
        os << r.sweep_param << ',';
        if (r.sweep_value) os << fmt12(*r.sweep_value);
        os << ',';
        if (r.p_out_analytic) os << fmt12(*r.p_out_analytic);
        os << ',';
        if (r.p_out_mc) os << fmt12(*r.p_out_mc);
        os << ',';
        if (r.mc_ci95) os << fmt12(*r.mc_ci95);
        os << ',' << fmt12(r.runtime_ms) << '\n';
    }
}

} // namespace ntn
