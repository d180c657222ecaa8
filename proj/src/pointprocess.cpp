#include "ntn/pointprocess.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace ntn {

namespace {

void check_thin_args(std::size_t n_candidates, std::size_t n_marks, double d_min) {
    if (d_min <= 0.0) throw std::invalid_argument("hard-core distance must be > 0");
    if (n_candidates != n_marks)
        throw std::invalid_argument("one mark per candidate required");
}

inline bool beats(double mark_j, std::size_t j, double mark_i, std::size_t i) {
    return mark_j < mark_i || (mark_j == mark_i && j < i); // ties broken by index
}

PointSet thin_quadratic(const PointSet& c, const std::vector<double>& m, double d_min) {
    const double d2 = d_min * d_min;
    PointSet kept;
    for (std::size_t i = 0; i < c.size(); ++i) {
        bool survive = true;
        for (std::size_t j = 0; j < c.size() && survive; ++j) {
            if (j == i) continue;
            const double dx = c[i].x - c[j].x;
            const double dy = c[i].y - c[j].y;
            const double dz = c[i].z - c[j].z;
            if (dx * dx + dy * dy + dz * dz < d2 && beats(m[j], j, m[i], i)) survive = false;
        }
        if (survive) kept.push_back(c[i]);
    }
    return kept;
}

// Cell-list neighbor search, cell edge = d_min, so neighbors live in the 27
// surrounding cells. Same comparisons as the quadratic path, so identical output.
PointSet thin_grid(const PointSet& c, const std::vector<double>& m, double d_min) {
    double lo[3] = {c[0].x, c[0].y, c[0].z};
    double hi[3] = {c[0].x, c[0].y, c[0].z};
    for (const auto& p : c) {
        lo[0] = std::min(lo[0], p.x); hi[0] = std::max(hi[0], p.x);
        lo[1] = std::min(lo[1], p.y); hi[1] = std::max(hi[1], p.y);
        lo[2] = std::min(lo[2], p.z); hi[2] = std::max(hi[2], p.z);
    }
    auto dim = [&](int a) {
        return std::max<std::int64_t>(1, static_cast<std::int64_t>((hi[a] - lo[a]) / d_min) + 1);
    };
    const std::int64_t nx = dim(0), ny = dim(1), nz = dim(2);
    auto cell_of = [&](const Point3& p) {
        auto ix = std::min<std::int64_t>(nx - 1, static_cast<std::int64_t>((p.x - lo[0]) / d_min));
        auto iy = std::min<std::int64_t>(ny - 1, static_cast<std::int64_t>((p.y - lo[1]) / d_min));
        auto iz = std::min<std::int64_t>(nz - 1, static_cast<std::int64_t>((p.z - lo[2]) / d_min));
        return (ix * ny + iy) * nz + iz;
    };
    std::vector<std::vector<std::uint32_t>> cells(static_cast<std::size_t>(nx * ny * nz));
    for (std::size_t i = 0; i < c.size(); ++i)
        cells[static_cast<std::size_t>(cell_of(c[i]))].push_back(static_cast<std::uint32_t>(i));

    const double d2 = d_min * d_min;
    PointSet kept;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto ix = std::min<std::int64_t>(nx - 1, static_cast<std::int64_t>((c[i].x - lo[0]) / d_min));
        const auto iy = std::min<std::int64_t>(ny - 1, static_cast<std::int64_t>((c[i].y - lo[1]) / d_min));
        const auto iz = std::min<std::int64_t>(nz - 1, static_cast<std::int64_t>((c[i].z - lo[2]) / d_min));
        bool survive = true;
        for (std::int64_t ax = std::max<std::int64_t>(0, ix - 1); survive && ax <= std::min(nx - 1, ix + 1); ++ax)
            for (std::int64_t ay = std::max<std::int64_t>(0, iy - 1); survive && ay <= std::min(ny - 1, iy + 1); ++ay)
                for (std::int64_t az = std::max<std::int64_t>(0, iz - 1); survive && az <= std::min(nz - 1, iz + 1); ++az)
                    for (std::uint32_t j : cells[static_cast<std::size_t>((ax * ny + ay) * nz + az)]) {
                        if (j == i) continue;
                        const double dx = c[i].x - c[j].x;
                        const double dy = c[i].y - c[j].y;
                        const double dz = c[i].z - c[j].z;
                        if (dx * dx + dy * dy + dz * dz < d2 && beats(m[j], j, m[i], i)) {
                            survive = false;
                            break;
                        }
                    }
        if (survive) kept.push_back(c[i]);
    }
    return kept;
}

} // namespace

PointSet sample_bpp(RandomStream& rng, int n, const Ball& region) {
    if (n < 0) throw std::invalid_argument("point count must be >= 0");
    PointSet pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pts.push_back(sample_in_ball(rng, region));
    return pts;
}

PointSet sample_ppp(RandomStream& rng, double lambda, const Ball& region) {
    if (lambda < 0.0) throw std::invalid_argument("density must be >= 0");
    const double mean = lambda * volume(region);
    int n = 0;
    if (mean > 0.0) n = static_cast<int>(std::poisson_distribution<long>(mean)(rng));
    return sample_bpp(rng, n, region);
}

PointSet matern2_thin_marked(const PointSet& candidates, const std::vector<double>& marks,
                             double d_min) {
    check_thin_args(candidates.size(), marks.size(), d_min);
    if (candidates.empty()) return {};
    if (candidates.size() <= 128) return thin_quadratic(candidates, marks, d_min);
    // A d_min far below the point spacing would ask for a huge, useless grid;
    // estimate the cell count in floating point (it can overflow integers).
    double lo[3] = {candidates[0].x, candidates[0].y, candidates[0].z};
    double hi[3] = {candidates[0].x, candidates[0].y, candidates[0].z};
    for (const auto& p : candidates) {
        lo[0] = std::min(lo[0], p.x); hi[0] = std::max(hi[0], p.x);
        lo[1] = std::min(lo[1], p.y); hi[1] = std::max(hi[1], p.y);
        lo[2] = std::min(lo[2], p.z); hi[2] = std::max(hi[2], p.z);
    }
    double cells = 1.0;
    for (int a = 0; a < 3; ++a) cells *= std::floor((hi[a] - lo[a]) / d_min) + 1.0;
    if (cells > 64.0 * static_cast<double>(candidates.size()))
        return thin_quadratic(candidates, marks, d_min);
    return thin_grid(candidates, marks, d_min);
}

PointSet matern2_thin(RandomStream& rng, const PointSet& candidates, double d_min) {
    std::vector<double> marks(candidates.size());
    for (auto& m : marks) m = uniform01(rng);
    return matern2_thin_marked(candidates, marks, d_min);
}

ClusteredPointSet sample_mhccp(RandomStream& rng, const MhccpConfig& cfg) {
    if (cfg.lambda1 < 0.0) throw std::invalid_argument("lambda1 must be >= 0");
    if (cfg.d_min <= 0.0) throw std::invalid_argument("d_min must be > 0");
    if (cfg.c_bar < 0.0) throw std::invalid_argument("c_bar must be >= 0");

    ClusteredPointSet out;
    out.parents = matern2_thin(rng, sample_ppp(rng, cfg.lambda1, cfg.region), cfg.d_min);
    for (std::size_t ip = 0; ip < out.parents.size(); ++ip) {
        int n_children = 0;
        if (cfg.c_bar > 0.0)
            n_children = static_cast<int>(std::poisson_distribution<long>(cfg.c_bar)(rng));
        const Ball cluster{out.parents[ip], cfg.d_min / 2.0};
        for (int j = 0; j < n_children; ++j)
            out.points.push_back({sample_in_ball(rng, cluster), static_cast<int>(ip)});
    }
    return out;
}

double matern_hardcore_density(double lambda1, double d_min) {
    if (lambda1 < 0.0) throw std::invalid_argument("lambda1 must be >= 0");
    if (d_min <= 0.0) throw std::invalid_argument("d_min must be > 0");
    const double vh = 4.0 / 3.0 * std::numbers::pi * d_min * d_min * d_min;
    const double a = lambda1 * vh;
    if (a == 0.0) return 0.0;
    // -expm1 keeps precision for small lambda1*vh, where the ratio -> lambda1
    return -std::expm1(-a) / vh;
}

double mhccp_density(double lambda1, double d_min, double c_bar) {
    if (c_bar < 0.0) throw std::invalid_argument("c_bar must be >= 0");
    return matern_hardcore_density(lambda1, d_min) * c_bar;
}

double mhccp_density_limit(double d_min, double c_bar) {
    if (d_min <= 0.0) throw std::invalid_argument("d_min must be > 0");
    if (c_bar < 0.0) throw std::invalid_argument("c_bar must be >= 0");
    return 3.0 * c_bar / (4.0 * std::numbers::pi * d_min * d_min * d_min);
}

void write_realization(std::ostream& os, const PointSet& group1, const ClusteredPointSet& group2) {
    os.precision(std::numeric_limits<double>::max_digits10);
    os << "tag\tparent\tx\ty\tz\n";
    for (const auto& p : group1)
        os << "a1\t-1\t" << p.x << '\t' << p.y << '\t' << p.z << '\n';
    for (const auto& p : group2.parents)
        os << "a2_parent\t-1\t" << p.x << '\t' << p.y << '\t' << p.z << '\n';
    for (const auto& cp : group2.points)
        os << "a2\t" << cp.parent << '\t' << cp.position.x << '\t' << cp.position.y << '\t'
           << cp.position.z << '\n';
}

} // namespace ntn
