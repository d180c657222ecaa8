#pragma once

#include "ntn/geometry.hpp"
#include "ntn/rng.hpp"

#include <iosfwd>
#include <vector>

namespace ntn {

using PointSet = std::vector<Point3>;

// Composite cluster process over a ball region: a candidate PPP of density
// lambda1 is hard-core thinned (retention distance d_min), and each retained
// parent spawns Poisson(c_bar) children uniform in a ball of radius d_min/2.
struct MhccpConfig {
    double lambda1 = 0.0; // candidate density, points per m^3, >= 0
    double d_min = 1.0;   // hard-core distance, m, > 0
    double c_bar = 0.0;   // mean cluster size, >= 0
    Ball region{};
};

struct ClusteredPoint {
    Point3 position{};
    int parent = -1; // index into parents, -1 for none
};

struct ClusteredPointSet {
    PointSet parents;
    std::vector<ClusteredPoint> points;
};

// Binomial point process: exactly n i.i.d. uniform points.
PointSet sample_bpp(RandomStream& rng, int n, const Ball& region);

// Poisson point process: Poisson(lambda * volume) points, uniform given the count.
PointSet sample_ppp(RandomStream& rng, double lambda, const Ball& region);

// Matern type-II thinning with explicit marks (marks.size() == candidates.size()).
// Candidate i survives iff no candidate j with distance(i,j) < d_min has
// (mark_j, j) < (mark_i, i). Single pass; deterministic.
PointSet matern2_thin_marked(const PointSet& candidates, const std::vector<double>& marks,
                             double d_min);

// Same with i.i.d. uniform(0,1) marks drawn from rng in candidate order.
PointSet matern2_thin(RandomStream& rng, const PointSet& candidates, double d_min);

// Full composite draw. Children may land slightly outside the region; they are kept.
ClusteredPointSet sample_mhccp(RandomStream& rng, const MhccpConfig& cfg);

// Retained-parent density of the thinned process.
double matern_hardcore_density(double lambda1, double d_min);

// Child (cluster-member) density: parent density times mean cluster size.
double mhccp_density(double lambda1, double d_min, double c_bar);

// Saturation value of mhccp_density as lambda1 grows without bound.
double mhccp_density_limit(double d_min, double c_bar);

// Debug dump, one record per point: tag, parent index (-1 if none), x, y, z.
void write_realization(std::ostream& os, const PointSet& group1, const ClusteredPointSet& group2);

} // namespace ntn
