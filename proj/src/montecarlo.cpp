#include "ntn/montecarlo.hpp"

#include "ntn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ntn {

namespace {

struct SnapshotDraw {
    double sinr = 0.0;
    double interference = 0.0;
};

double node_distance(const Point3& p, const Scenario& s, const SnapshotOptions& opts) {
    if (opts.distance_mode == DistanceMode::CommonD0) return s.d0_m;
    const double off = opts.satellite_offset_m > 0.0 ? opts.satellite_offset_m : s.d0_m;
    const Point3 sat{s.topology.region.center.x, s.topology.region.center.y,
                     s.topology.region.center.z + off};
    return distance(p, sat);
}

SnapshotDraw draw_snapshot(RandomStream& rng, const Scenario& s, const SnapshotOptions& opts) {
    const PointSet bpp = sample_bpp(rng, s.n1_total, s.topology.region);
    const ClusteredPointSet clustered = sample_mhccp(rng, s.topology);
    const CochannelSelection sel =
        assign_channels(rng, bpp, clustered, s.k_channels, opts.a2_channel_policy);

    const PointSet& targets = s.target_group == TargetGroup::A1 ? sel.group1 : sel.group2;
    if (targets.empty())
        throw empty_channel_error("no co-channel node available in the target group");
    const std::size_t target_idx =
        std::uniform_int_distribution<std::size_t>(0, targets.size() - 1)(rng);

    const double d_m = node_distance(targets[target_idx], s, opts);
    const double numerator = s.p_target_w * target_gain(s.beam) * sr_sample(rng, s.sr) *
                             std::pow(d_m, -s.alpha);

    double interference = 0.0;
    auto add_group = [&](const PointSet& nodes, double power, bool skip_target) {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (skip_target && i == target_idx) continue;
            const double g = sample_interferer_gain(rng, s.beam);
            const double h = sr_sample(rng, s.sr);
            const double d = node_distance(nodes[i], s, opts);
            interference += power * g * h * std::pow(d, -s.alpha);
        }
    };
    add_group(sel.group1, s.p1_w, s.target_group == TargetGroup::A1);
    add_group(sel.group2, s.p2_w, s.target_group == TargetGroup::A2);

    return {numerator / (interference + s.noise_w), interference};
}

} // namespace

CochannelSelection assign_channels(RandomStream& rng, const PointSet& group1,
                                   const ClusteredPointSet& group2, int k_channels,
                                   A2ChannelPolicy policy) {
    if (k_channels < 1) throw std::invalid_argument("k_channels must be >= 1");
    if (group1.size() % static_cast<std::size_t>(k_channels) != 0)
        throw std::invalid_argument("invalid channel count: " + std::to_string(group1.size()) +
                                    " group-1 nodes are not divisible by k_channels = " +
                                    std::to_string(k_channels));

    CochannelSelection sel;
    // partial Fisher-Yates: first n1_total/k indices of a random permutation
    const std::size_t want = group1.size() / static_cast<std::size_t>(k_channels);
    std::vector<std::size_t> idx(group1.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < want; ++i) {
        const std::size_t j =
            std::uniform_int_distribution<std::size_t>(i, idx.size() - 1)(rng);
        std::swap(idx[i], idx[j]);
        sel.group1.push_back(group1[idx[i]]);
    }

    if (policy == A2ChannelPolicy::AllOnChannel || k_channels == 1) {
        sel.group2.reserve(group2.points.size());
        for (const auto& cp : group2.points) sel.group2.push_back(cp.position);
        return sel;
    }

    // Per-cluster share: visit clusters in random order, take whole clusters
    // until the member count reaches N2 / k_channels.
    std::vector<std::vector<std::size_t>> members(group2.parents.size());
    for (std::size_t i = 0; i < group2.points.size(); ++i) {
        const int p = group2.points[i].parent;
        if (p >= 0) members[static_cast<std::size_t>(p)].push_back(i);
    }
    std::vector<std::size_t> order(group2.parents.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    const double share =
        static_cast<double>(group2.points.size()) / static_cast<double>(k_channels);
    double taken = 0.0;
    for (std::size_t ci : order) {
        if (taken >= share) break;
        for (std::size_t i : members[ci]) sel.group2.push_back(group2.points[i].position);
        taken += static_cast<double>(members[ci].size());
    }
    return sel;
}

double simulate_snapshot(RandomStream& rng, const Scenario& s, const SnapshotOptions& opts) {
    return draw_snapshot(rng, s, opts).sinr;
}

double simulate_interference(RandomStream& rng, const Scenario& s, const SnapshotOptions& opts) {
    return draw_snapshot(rng, s, opts).interference;
}

OutageEstimate estimate_outage(const Scenario& s, double threshold, std::int64_t n_iter,
                               std::uint64_t seed, const SnapshotOptions& opts,
                               unsigned n_threads) {
    if (n_iter < 1) throw std::invalid_argument("n_iter must be >= 1");
    if (!(threshold > 0.0)) throw std::invalid_argument("SINR threshold must be > 0");
    {
        auto problems = validate(s);
        if (!problems.empty()) {
            std::string msg = "invalid scenario:";
            for (const auto& p : problems) msg += "\n  - " + p;
            throw std::invalid_argument(msg);
        }
    }

    unsigned workers = n_threads != 0 ? n_threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(
        std::min<std::int64_t>(n_iter, static_cast<std::int64_t>(workers)));

    // Each replication i draws from substream (seed, i); a worker's chunk
    // boundaries cannot influence any draw, so the count (and hence p_hat)
    // is bit-identical for every thread count.
    auto run_chunk = [&](std::int64_t lo, std::int64_t hi) {
        std::int64_t outages = 0;
        for (std::int64_t i = lo; i < hi; ++i) {
            RandomStream rng = make_stream(seed, static_cast<std::uint64_t>(i));
            if (simulate_snapshot(rng, s, opts) <= threshold) ++outages;
        }
        return outages;
    };

    std::int64_t count = 0;
    if (workers == 1) {
        count = run_chunk(0, n_iter);
    } else {
        std::vector<std::future<std::int64_t>> parts;
        parts.reserve(workers);
        const std::int64_t chunk = (n_iter + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::int64_t lo = static_cast<std::int64_t>(w) * chunk;
            const std::int64_t hi = std::min<std::int64_t>(n_iter, lo + chunk);
            if (lo >= hi) break;
            parts.push_back(std::async(std::launch::async, run_chunk, lo, hi));
        }
        for (auto& f : parts) count += f.get();
    }

    OutageEstimate est;
    est.p_hat = static_cast<double>(count) / static_cast<double>(n_iter);
    est.half_width_95 =
        1.96 * std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(n_iter));
    est.n_iterations = n_iter;
    est.seed = seed;
    return est;
}

} // namespace ntn
