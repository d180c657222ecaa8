#include "ntn/antenna.hpp"

#include <numbers>
#include <stdexcept>

namespace ntn {

namespace {
void check(const BeamPattern& b) {
    if (!(b.g_side_tx > 0.0) || !(b.g_side_tx <= b.g_main_tx) || !(b.g_rx > 0.0))
        throw std::invalid_argument("beam gains must satisfy 0 < g_side_tx <= g_main_tx, g_rx > 0");
    if (!(b.theta >= 0.0) || !(b.theta <= 2.0 * std::numbers::pi))
        throw std::invalid_argument("beamwidth must lie in [0, 2pi]");
}
} // namespace

double target_gain(const BeamPattern& b) {
    check(b);
    return b.g_main_tx * b.g_rx;
}

double sample_interferer_gain(RandomStream& rng, const BeamPattern& b) {
    check(b);
    const double p_main = b.theta / (2.0 * std::numbers::pi);
    return uniform01(rng) < p_main ? b.g_main_tx * b.g_rx : b.g_side_tx * b.g_rx;
}

double mean_gain_mixture(const BeamPattern& b, const std::function<double(double)>& f) {
    check(b);
    const double p_main = b.theta / (2.0 * std::numbers::pi);
    return p_main * f(b.g_main_tx * b.g_rx) + (1.0 - p_main) * f(b.g_side_tx * b.g_rx);
}

} // namespace ntn
