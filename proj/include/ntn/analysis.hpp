#pragma once

#include "ntn/antenna.hpp"
#include "ntn/channel.hpp"
#include "ntn/pointprocess.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace ntn {

enum class TargetGroup { A1, A2 };

// Everything the closed form and the simulator share. All linear/SI units:
// watts, meters, points per m^3. The n1_total nodes of group 1 are split
// evenly over k_channels; the clustered group 2 rides one channel in full.
struct Scenario {
    SRParams sr{0.158, 1.0, 0.1};
    BeamPattern beam{};
    MhccpConfig topology{};
    int n1_total = 0;
    int k_channels = 1;
    double p_target_w = 1.0;
    double p1_w = 1.0;
    double p2_w = 1.0;
    double alpha = 2.0;
    double d0_m = 1.0;
    double noise_w = 0.0;
    TargetGroup target_group = TargetGroup::A1;
};

// Empty when valid, otherwise one message per violated invariant.
std::vector<std::string> validate(const Scenario& s);

// Number of same-group co-channel interferers seen by the target.
int cochannel_group1_interferers(const Scenario& s);

struct SeriesControl {
    int k_max = 200;
    double tol = 1e-10;
};

// Rate constant of the exponential bound on the regularized incomplete gamma:
// zeta(k) = Gamma(k+2)^(-1/(k+1)); zeta(0) = 1 makes the k = 0 term exact.
double alzer_zeta(int k);

// Laplace argument of the (k, t) series term.
double laplace_argument(const Scenario& s, double threshold, int k, int t);

// Fading MGF of one interferer, identical to sr_mgf on the scenario's fading.
double fading_mgf(const Scenario& s, double x);

// Beam-averaged MGF of one interferer of group 1 or 2 at Laplace argument sv.
double gain_mixed_mgf(const Scenario& s, int group, double sv);

// Laplace transform of the aggregate co-channel interference power.
double laplace_interference(const Scenario& s, double sv);

// Closed-form link outage probability P[SINR <= threshold], threshold linear > 0.
double outage_probability(const Scenario& s, double threshold, const SeriesControl& ctrl = {});

// Same series with an arbitrary interference Laplace transform plugged in.
double outage_probability_with_laplace(const Scenario& s, double threshold,
                                       const SeriesControl& ctrl,
                                       const std::function<double(double)>& laplace);

enum class SweepParam { Threshold, TargetPower, RegionRadius, Channels, CandidateDensity };

struct SweepPoint {
    double value = 0.0;
    double p_out = 0.0;
};

// One outage evaluation per value; `threshold` is used for every parameter
// except SweepParam::Threshold, where the values are the thresholds.
std::vector<SweepPoint> outage_curve(const Scenario& s, double threshold, SweepParam param,
                                     std::span<const double> values,
                                     const SeriesControl& ctrl = {});

// Applies one sweep value to a copy of the scenario (shared with the CLI and
// the Monte Carlo side so both sweep identically).
Scenario apply_sweep_value(const Scenario& s, SweepParam param, double value);

} // namespace ntn
