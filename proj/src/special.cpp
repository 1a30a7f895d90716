#include "nnent/special.hpp"

#include <cmath>
#include <string>

#include "nnent/errors.hpp"

namespace nnent::special {

namespace {

// Lanczos g = 7, n = 9 coefficient set.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

constexpr double kHalfLog2Pi = 0.91893853320467274178;  // ln(2*pi)/2

double lanczos_log_gamma(double x) {
    // valid for x >= 0.5
    double sum = kLanczos[0];
    for (int i = 1; i < 9; ++i) sum += kLanczos[i] / (x - 1.0 + i);
    const double t = x + 6.5;
    return kHalfLog2Pi + (x - 0.5) * std::log(t) - t + std::log(sum);
}

void require_positive(double x, const char* fn) {
    if (!(x > 0.0)) throw DomainError(std::string(fn) + ": argument must be positive");
}

}  // namespace

double log_gamma(double x) {
    require_positive(x, "log_gamma");
    if (x < 0.5) return lanczos_log_gamma(x + 1.0) - std::log(x);
    return lanczos_log_gamma(x);
}

double digamma(double x) {
    require_positive(x, "digamma");
    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    // asymptotic series in 1/x^2, Bernoulli terms through B_14
    const double r = 1.0 / (x * x);
    double series = r * (1.0 / 12 - r * (1.0 / 120 - r * (1.0 / 252 - r * (1.0 / 240 - r * (1.0 / 132 - r * (691.0 / 32760 - r / 12))))));
    return acc + std::log(x) - 0.5 / x - series;
}

double trigamma(double x) {
    require_positive(x, "trigamma");
    double acc = 0.0;
    while (x < 10.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    const double series =
        r * (1.0 / 6 - r * (1.0 / 30 - r * (1.0 / 42 - r * (1.0 / 30 - r * (5.0 / 66 - r * (691.0 / 2730 - r * (7.0 / 6)))))));
    return acc + 1.0 / x + 0.5 * r + series / x;
}

double log_unit_ball_volume(int m) {
    if (m < 1) throw DomainError("unit_ball_volume: dimension must be >= 1");
    return 0.5 * m * std::log(M_PI) - log_gamma(0.5 * m + 1.0);
}

double unit_ball_volume(int m) { return std::exp(log_unit_ball_volume(m)); }

double log_c_k(int k, double q) {
    if (k < 1) throw DomainError("c_k: k must be >= 1");
    if (q >= k + 1.0) throw DomainError("c_k: q must be < k+1");
    if (std::abs(q - 1.0) < 1e-8) return -digamma(static_cast<double>(k));
    return (log_gamma(static_cast<double>(k)) - log_gamma(k + 1.0 - q)) / (1.0 - q);
}

double c_k(int k, double q) { return std::exp(log_c_k(k, q)); }

}  // namespace nnent::special
