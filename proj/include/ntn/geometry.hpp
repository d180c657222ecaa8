#pragma once

#include "ntn/rng.hpp"

namespace ntn {

struct Point3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

struct Ball {
    Point3 center{};
    double radius = 0.0; // meters, >= 0
};

double volume(const Ball& b);
double distance(const Point3& a, const Point3& b);

// Uniform draw from the closed ball: radius by inverse CDF (R * u^(1/3)),
// direction from a normalized Gaussian triple.
Point3 sample_in_ball(RandomStream& rng, const Ball& b);

} // namespace ntn
