#pragma once

#include "ntn/rng.hpp"

#include <functional>

namespace ntn {

// Sector transmit beam plus receive gain. An interferer's transmit lobe points
// at the receiver with probability theta / 2pi (main gain), otherwise the side
// lobe is seen. The intended transmitter is always main-lobe aligned.
struct BeamPattern {
    double g_main_tx = 1.0; // linear, > 0
    double g_side_tx = 1.0; // linear, 0 < g_side_tx <= g_main_tx
    double g_rx = 1.0;      // linear, > 0
    double theta = 0.0;     // beamwidth, radians, in [0, 2pi]
};

double target_gain(const BeamPattern& b);
double sample_interferer_gain(RandomStream& rng, const BeamPattern& b);

// E[f(G)] over the two-point interferer gain law.
double mean_gain_mixture(const BeamPattern& b, const std::function<double(double)>& f);

} // namespace ntn
