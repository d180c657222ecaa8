#pragma once

#include "ntn/rng.hpp"

namespace ntn {

// Shadowed-Rician power fading |h|^2: scattered complex-Gaussian component of
// total mean power 2c plus a LoS amplitude whose square is Gamma(q, omega/q).
// kappa, delta, beta are the PDF constants; beta > delta always holds for
// valid (c, q, omega), which is what makes the CDF/outage series converge.
struct SRParams {
    SRParams(double c, double q, double omega);

    double c;
    double q;
    double omega;
    double kappa;
    double delta;
    double beta;
};

// Kummer confluent hypergeometric series 1F1(a; b; x). Terminates exactly for
// nonpositive-integer a; throws numeric_error if max terms are exhausted or
// the value overflows, std::invalid_argument for nonpositive-integer b.
double hyp1f1(double a, double b, double x);

// Lower incomplete gamma, gamma(a, x) = integral_0^x t^(a-1) e^(-t) dt, a > 0, x >= 0.
double lower_incomplete_gamma(double a, double x);

// Regularized version P(a, x) = gamma(a, x) / Gamma(a), safe for large a.
double reg_lower_gamma(double a, double x);

// k-th CDF/outage series coefficient. Exactly zero for k >= q at integer q.
double sr_series_coefficient(const SRParams& p, int k);

double sr_pdf(const SRParams& p, double x);

// Series CDF; truncated when the tail bound drops below tol, numeric_error if
// that never happens within k_max terms.
double sr_cdf(const SRParams& p, double x, int k_max = 200, double tol = 1e-10);

// Moment generating function E[exp(-x |h|^2)], x >= 0.
double sr_mgf(const SRParams& p, double x);

// Draw one power sample: |Z + xi|^2 with Z circular complex Gaussian.
double sr_sample(RandomStream& rng, const SRParams& p);

} // namespace ntn
