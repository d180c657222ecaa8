#pragma once

#include "ntn/analysis.hpp"

#include <cstdint>

namespace ntn {

enum class DistanceMode { CommonD0, ExactGeometry };
enum class A2ChannelPolicy { AllOnChannel, PerClusterShare };

struct SnapshotOptions {
    DistanceMode distance_mode = DistanceMode::CommonD0;
    A2ChannelPolicy a2_channel_policy = A2ChannelPolicy::AllOnChannel;
    // Satellite distance from the region center along +z for exact geometry;
    // <= 0 means "use the scenario's d0".
    double satellite_offset_m = 0.0;
};

struct OutageEstimate {
    double p_hat = 0.0;
    double half_width_95 = 0.0; // 1.96 sqrt(p(1-p)/n)
    std::int64_t n_iterations = 0;
    std::uint64_t seed = 0;
};

struct CochannelSelection {
    PointSet group1;
    PointSet group2;
};

// FDMA slice of one topology realization: exactly n1_total/k_channels group-1
// nodes picked uniformly; group 2 contributes all cluster members
// (AllOnChannel) or whole clusters until ~N2/k_channels members
// (PerClusterShare, clusters are never split).
CochannelSelection assign_channels(RandomStream& rng, const PointSet& group1,
                                   const ClusteredPointSet& group2, int k_channels,
                                   A2ChannelPolicy policy);

// One fresh topology + fading draw; returns the target's SINR (linear).
double simulate_snapshot(RandomStream& rng, const Scenario& s, const SnapshotOptions& opts = {});

// Same snapshot mechanics, but returns the aggregate interference power.
double simulate_interference(RandomStream& rng, const Scenario& s,
                             const SnapshotOptions& opts = {});

// n_iter independent snapshots on counter-derived substreams (seed, i). The
// result is bit-identical for a given (scenario, threshold, n_iter, seed,
// opts) regardless of n_threads (0 = hardware concurrency).
OutageEstimate estimate_outage(const Scenario& s, double threshold, std::int64_t n_iter,
                               std::uint64_t seed, const SnapshotOptions& opts = {},
                               unsigned n_threads = 0);

} // namespace ntn
