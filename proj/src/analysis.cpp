#include "ntn/analysis.hpp"

#include "ntn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ntn {

namespace {

// Neumaier compensated sum; the t-sum alternates with binomial weights, so
// plain accumulation would shed digits for larger k.
struct CompensatedSum {
    double s = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = s + v;
        comp += std::fabs(s) >= std::fabs(v) ? (s - t) + v : (v - t) + s;
        s = t;
    }
    double value() const { return s + comp; }
};

double require_valid(const Scenario& s, double threshold) {
    if (!(threshold > 0.0))
        throw std::invalid_argument("SINR threshold must be > 0 (linear scale)");
    auto problems = validate(s);
    if (!problems.empty()) {
        std::string msg = "invalid scenario:";
        for (const auto& p : problems) msg += "\n  - " + p;
        throw std::invalid_argument(msg);
    }
    return threshold;
}

} // namespace

std::vector<std::string> validate(const Scenario& s) {
    std::vector<std::string> out;
    if (!(s.sr.c > 0.0)) out.push_back("fading parameter c must be > 0");
    if (!(s.sr.q > 0.0)) out.push_back("fading parameter q must be > 0");
    if (!(s.sr.omega >= 0.0)) out.push_back("fading parameter omega must be >= 0");
    if (!(s.beam.g_side_tx > 0.0) || !(s.beam.g_side_tx <= s.beam.g_main_tx))
        out.push_back("beam gains must satisfy 0 < g_side_tx <= g_main_tx");
    if (!(s.beam.g_rx > 0.0)) out.push_back("receive gain must be > 0");
    if (!(s.beam.theta >= 0.0) || !(s.beam.theta <= 2.0 * std::numbers::pi))
        out.push_back("beamwidth must lie in [0, 2pi]");
    if (!(s.topology.lambda1 >= 0.0)) out.push_back("lambda1 must be >= 0");
    if (!(s.topology.d_min > 0.0)) out.push_back("d_min must be > 0");
    if (!(s.topology.c_bar >= 0.0)) out.push_back("c_bar must be >= 0");
    if (!(s.topology.region.radius > 0.0)) out.push_back("region radius must be > 0");
    if (s.n1_total < 1) out.push_back("n1_total must be >= 1");
    if (s.k_channels < 1) out.push_back("k_channels must be >= 1");
    if (s.n1_total >= 1 && s.k_channels >= 1 && s.n1_total % s.k_channels != 0)
        out.push_back("n1_total = " + std::to_string(s.n1_total) +
                      " is not divisible by k_channels = " + std::to_string(s.k_channels));
    if (!(s.p_target_w > 0.0)) out.push_back("target power must be > 0");
    if (!(s.p1_w > 0.0)) out.push_back("group-1 power must be > 0");
    if (!(s.p2_w > 0.0)) out.push_back("group-2 power must be > 0");
    if (!(s.alpha >= 2.0)) out.push_back("path-loss exponent must be >= 2");
    if (!(s.d0_m > 0.0)) out.push_back("link distance d0 must be > 0");
    if (!(s.noise_w >= 0.0)) out.push_back("noise power must be >= 0");
    return out;
}

int cochannel_group1_interferers(const Scenario& s) {
    const int per_channel = s.n1_total / s.k_channels;
    return s.target_group == TargetGroup::A1 ? per_channel - 1 : per_channel;
}

double alzer_zeta(int k) {
    if (k < 0) throw std::invalid_argument("series index must be >= 0");
    return std::exp(-std::lgamma(k + 2.0) / (k + 1.0));
}

double laplace_argument(const Scenario& s, double threshold, int k, int t) {
    if (t < 0) throw std::invalid_argument("binomial index must be >= 0");
    const double rate = s.sr.beta - s.sr.delta;
    return t * alzer_zeta(k) * rate * threshold * std::pow(s.d0_m, s.alpha) /
           (s.p_target_w * target_gain(s.beam));
}

double fading_mgf(const Scenario& s, double x) {
    return sr_mgf(s.sr, x);
}

double gain_mixed_mgf(const Scenario& s, int group, double sv) {
    if (group != 1 && group != 2) throw std::invalid_argument("group must be 1 or 2");
    const double p_l = group == 1 ? s.p1_w : s.p2_w;
    const double path = p_l * std::pow(s.d0_m, -s.alpha);
    return mean_gain_mixture(s.beam, [&](double g) { return fading_mgf(s, sv * path * g); });
}

double laplace_interference(const Scenario& s, double sv) {
    if (sv < 0.0) throw std::invalid_argument("Laplace argument must be >= 0");
    const int n1 = cochannel_group1_interferers(s);
    const double l3 = mhccp_density(s.topology.lambda1, s.topology.d_min, s.topology.c_bar);
    const double v1 = volume(s.topology.region);
    return std::pow(gain_mixed_mgf(s, 1, sv), n1) *
           std::exp(l3 * v1 * (gain_mixed_mgf(s, 2, sv) - 1.0));
}

double outage_probability_with_laplace(const Scenario& s, double threshold,
                                       const SeriesControl& ctrl,
                                       const std::function<double(double)>& laplace) {
    require_valid(s, threshold);
    if (ctrl.k_max < 0 || !(ctrl.tol > 0.0)) throw std::invalid_argument("bad series control");

    const double rate = s.sr.beta - s.sr.delta;
    // prefac_k = Psi(k) Gamma(k+1) / rate^(k+1); the inner expectation the
    // binomial sum represents lies in [0, 1], so |term_k| <= |prefac_k|.
    double prefac = s.sr.kappa / rate;
    long double acc = 0.0L;
    int small_streak = 0;
    for (int k = 0; k <= ctrl.k_max; ++k) {
        if (prefac == 0.0) break;
        CompensatedSum inner;
        double binom = 1.0;
        for (int t = 0; t <= k + 1; ++t) {
            const double sv = laplace_argument(s, threshold, k, t);
            const double damp = std::exp(-sv * s.noise_w) * laplace(sv);
            inner.add((t % 2 == 0 ? 1.0 : -1.0) * binom * damp);
            binom *= static_cast<double>(k + 1 - t) / (t + 1.0);
        }
        const double term = prefac * inner.value();
        acc += term;
        const double scale = std::max(std::fabs(static_cast<double>(acc)), 1e-300);
        prefac *= s.sr.delta * (s.sr.q - 1.0 - k) / ((k + 1.0) * rate);
        const bool tail_ok = k + 1 >= s.sr.q && std::fabs(prefac) <= ctrl.tol * scale;
        small_streak = std::fabs(term) <= ctrl.tol * scale ? small_streak + 1 : 0;
        if (tail_ok || small_streak >= 2)
            return std::clamp(static_cast<double>(acc), 0.0, 1.0);
    }
    if (prefac == 0.0) return std::clamp(static_cast<double>(acc), 0.0, 1.0);
    throw numeric_error("outage series not converged after " + std::to_string(ctrl.k_max + 1) +
                        " terms; raise k_max or loosen tol");
}

double outage_probability(const Scenario& s, double threshold, const SeriesControl& ctrl) {
    return outage_probability_with_laplace(
        s, threshold, ctrl, [&](double sv) { return laplace_interference(s, sv); });
}

Scenario apply_sweep_value(const Scenario& s, SweepParam param, double value) {
    Scenario out = s;
    switch (param) {
        case SweepParam::Threshold:
            break; // threshold is not part of the scenario
        case SweepParam::TargetPower:
            out.p_target_w = value;
            break;
        case SweepParam::RegionRadius:
            out.topology.region.radius = value;
            break;
        case SweepParam::Channels: {
            const double r = std::round(value);
            if (std::fabs(value - r) > 1e-9 || r < 1.0)
                throw std::invalid_argument("channel count must be a positive integer");
            out.k_channels = static_cast<int>(r);
            break;
        }
        case SweepParam::CandidateDensity:
            out.topology.lambda1 = value;
            break;
    }
    return out;
}

std::vector<SweepPoint> outage_curve(const Scenario& s, double threshold, SweepParam param,
                                     std::span<const double> values, const SeriesControl& ctrl) {
    std::vector<SweepPoint> out;
    out.reserve(values.size());
    for (double v : values) {
        const Scenario scn = apply_sweep_value(s, param, v);
        const double t = param == SweepParam::Threshold ? v : threshold;
        out.push_back({v, outage_probability(scn, t, ctrl)});
    }
    return out;
}

} // namespace ntn
