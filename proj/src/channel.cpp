#include "ntn/channel.hpp"

#include "ntn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ntn {

namespace {

constexpr int kMaxKummerTerms = 20000;
constexpr int kMaxGammaIter = 1000;

bool is_nonpositive_integer(double v) {
    return v <= 0.0 && v == std::floor(v);
}

double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

// log 1F1(a; b; x) for a, b, x > 0 (all series terms positive, no cancellation).
double log_hyp1f1_positive(double a, double b, double x) {
    double log_term = 0.0;
    double log_sum = 0.0;
    int small_streak = 0;
    for (int k = 0; k < kMaxKummerTerms; ++k) {
        log_term += std::log((a + k) * x / ((b + k) * (k + 1)));
        log_sum = log_add_exp(log_sum, log_term);
        if (log_term < log_sum + std::log(1e-18)) {
            if (++small_streak >= 2) return log_sum;
        } else {
            small_streak = 0;
        }
    }
    throw numeric_error("1F1 series did not converge");
}

// Series expansion of P(a, x), valid and fast for x < a + 1.
double reg_gamma_series(double a, double x) {
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 0; n < kMaxGammaIter; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * std::numeric_limits<double>::epsilon())
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
    throw numeric_error("incomplete gamma series did not converge");
}

// Modified Lentz continued fraction for Q(a, x), x >= a + 1.
double reg_gamma_cf(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxGammaIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= 1e-15)
            return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
    throw numeric_error("incomplete gamma continued fraction did not converge");
}

} // namespace

SRParams::SRParams(double c_, double q_, double omega_) : c(c_), q(q_), omega(omega_) {
    if (!(c > 0.0)) throw std::invalid_argument("SR: scattered power parameter c must be > 0");
    if (!(q > 0.0)) throw std::invalid_argument("SR: shadowing parameter q must be > 0");
    if (!(omega >= 0.0)) throw std::invalid_argument("SR: LoS power omega must be >= 0");
    const double m = 2.0 * c * q + omega;
    kappa = std::exp(q * std::log(2.0 * c * q) - std::log(2.0 * c) - q * std::log(m));
    delta = omega / (2.0 * c * m);
    beta = 1.0 / (2.0 * c);
    if (!(beta > delta))
        throw std::invalid_argument(
            "SR: derived rates violate beta > delta; the distribution series would diverge. "
            "This cannot happen for c > 0, q > 0, omega >= 0, so check the inputs.");
}

double hyp1f1(double a, double b, double x) {
    if (is_nonpositive_integer(b))
        throw std::invalid_argument("1F1: b must not be a nonpositive integer");
    if (x == 0.0 || a == 0.0) return 1.0;

    long double sum = 1.0L;
    long double term = 1.0L;
    int small_streak = 0;
    for (int k = 0; k < kMaxKummerTerms; ++k) {
        term *= static_cast<long double>(a + k) * x / ((b + k) * (k + 1.0));
        sum += term;
        if (term == 0.0L) return static_cast<double>(sum); // a hit a nonpositive integer
        if (!std::isfinite(static_cast<double>(sum)))
            throw numeric_error("1F1: series overflows double range");
        if (std::fabs(static_cast<double>(term)) <=
            1e-18 * std::fabs(static_cast<double>(sum))) {
            if (++small_streak >= 2) return static_cast<double>(sum);
        } else {
            small_streak = 0;
        }
    }
    throw numeric_error("1F1 series did not converge");
}

double reg_lower_gamma(double a, double x) {
    if (!(a > 0.0)) throw std::invalid_argument("incomplete gamma: a must be > 0");
    if (x < 0.0) throw std::invalid_argument("incomplete gamma: x must be >= 0");
    if (x == 0.0) return 0.0;
    return x < a + 1.0 ? reg_gamma_series(a, x) : 1.0 - reg_gamma_cf(a, x);
}

double lower_incomplete_gamma(double a, double x) {
    return reg_lower_gamma(a, x) * std::tgamma(a);
}

double sr_series_coefficient(const SRParams& p, int k) {
    if (k < 0) throw std::invalid_argument("series index must be >= 0");
    // Psi(k) = (-1)^k kappa delta^k (1-q)_k / (k!)^2, built by recurrence in
    // log magnitude + sign so large k neither overflows nor loses the sign.
    double log_mag = std::log(p.kappa);
    double sign = 1.0;
    for (int i = 0; i < k; ++i) {
        const double f = p.delta * (p.q - 1.0 - i) / ((i + 1.0) * (i + 1.0));
        if (f == 0.0) return 0.0; // integer q: series terminates at k = q
        log_mag += std::log(std::fabs(f));
        if (f < 0.0) sign = -sign;
    }
    return sign * std::exp(log_mag);
}

double sr_pdf(const SRParams& p, double x) {
    if (x < 0.0) throw std::invalid_argument("power must be >= 0");
    if (x == 0.0) return p.kappa;
    const double log_h = p.delta > 0.0 ? log_hyp1f1_positive(p.q, 1.0, p.delta * x) : 0.0;
    return std::exp(std::log(p.kappa) - p.beta * x + log_h);
}

double sr_cdf(const SRParams& p, double x, int k_max, double tol) {
    if (x < 0.0) throw std::invalid_argument("power must be >= 0");
    if (k_max < 0 || !(tol > 0.0)) throw std::invalid_argument("bad series control");
    if (x == 0.0) return 0.0;

    const double rate = p.beta - p.delta;
    const double y = rate * x;
    // prefac_k = Psi(k) Gamma(k+1) / rate^(k+1); |term_k| <= |prefac_k| since
    // the regularized gamma factor lies in [0, 1].
    double prefac = p.kappa / rate;
    long double acc = 0.0L;
    int small_streak = 0;
    for (int k = 0; k <= k_max; ++k) {
        if (prefac == 0.0) return std::clamp(static_cast<double>(acc), 0.0, 1.0);
        const double term = prefac * reg_lower_gamma(k + 1.0, y);
        acc += term;
        const double scale = std::max(std::fabs(static_cast<double>(acc)), 1e-300);
        prefac *= p.delta * (p.q - 1.0 - k) / ((k + 1.0) * rate);
        const bool tail_ok = k + 1 >= p.q && std::fabs(prefac) <= tol * scale;
        small_streak = std::fabs(term) <= tol * scale ? small_streak + 1 : 0;
        if (tail_ok || small_streak >= 2)
            return std::clamp(static_cast<double>(acc), 0.0, 1.0);
    }
    throw numeric_error("SR CDF series not converged after " + std::to_string(k_max + 1) +
                        " terms; raise k_max or loosen tol");
}

double sr_mgf(const SRParams& p, double x) {
    if (x < 0.0) throw std::invalid_argument("MGF argument must be >= 0");
    const double u = 1.0 + 2.0 * p.c * x;
    const double m = 2.0 * p.c * p.q + p.omega;
    // (2cq)^q u^(q-1) / ((2cq+omega) u - omega)^q, evaluated in logs
    return std::exp(p.q * std::log(2.0 * p.c * p.q) + (p.q - 1.0) * std::log(u) -
                    p.q * std::log(m * u - p.omega));
}

double sr_sample(RandomStream& rng, const SRParams& p) {
    std::normal_distribution<double> gauss(0.0, std::sqrt(p.c));
    const double re = gauss(rng);
    const double im = gauss(rng);
    double xi = 0.0;
    if (p.omega > 0.0) {
        std::gamma_distribution<double> g(p.q, p.omega / p.q);
        xi = std::sqrt(g(rng));
    }
    return (re + xi) * (re + xi) + im * im;
}

} // namespace ntn
