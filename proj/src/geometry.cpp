#include "ntn/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ntn {

double volume(const Ball& b) {
    if (b.radius < 0.0) throw std::invalid_argument("ball radius must be >= 0");
    return 4.0 / 3.0 * std::numbers::pi * b.radius * b.radius * b.radius;
}

double distance(const Point3& a, const Point3& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

Point3 sample_in_ball(RandomStream& rng, const Ball& b) {
    if (b.radius < 0.0) throw std::invalid_argument("ball radius must be >= 0");
    const double r = b.radius * std::cbrt(uniform01(rng));
    std::normal_distribution<double> gauss(0.0, 1.0);
    double ux, uy, uz, n2;
    do {
        ux = gauss(rng);
        uy = gauss(rng);
        uz = gauss(rng);
        n2 = ux * ux + uy * uy + uz * uz;
    } while (n2 == 0.0);
    const double inv = 1.0 / std::sqrt(n2);
    return {b.center.x + r * ux * inv, b.center.y + r * uy * inv, b.center.z + r * uz * inv};
}

} // namespace ntn
