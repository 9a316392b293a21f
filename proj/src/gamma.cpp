#include "fracdimer/gamma.hpp"

#include <cmath>
#include <limits>

namespace fracdimer {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Lanczos coefficients for g = 7, n = 9 (Godfrey's set).
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

// Valid for x >= 0.5.
double lanczos_right(double x) {
    double acc = kLanczos[0];
    for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (x - 1.0 + k);
    const double t = x + 6.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * acc;
}

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

}  // namespace

double gamma_fn(double x) {
    if (is_nonpositive_integer(x)) {
        // Pole.  Sign is immaterial for callers; signal with +inf.
        return std::numeric_limits<double>::infinity();
    }
    if (x == 1.0 || x == 2.0) return 1.0;
    if (x >= 0.5) return lanczos_right(x);
    // Reflection: Gamma(x) = pi / (sin(pi x) * Gamma(1 - x)).
    return kPi / (std::sin(kPi * x) * lanczos_right(1.0 - x));
}

double recip_gamma(double x) {
    if (is_nonpositive_integer(x)) return 0.0;
    if (x == 1.0 || x == 2.0) return 1.0;
    if (x >= 0.5) return 1.0 / lanczos_right(x);
    // 1/Gamma(x) = sin(pi x) * Gamma(1 - x) / pi -- no overflow for x << 0
    // until Gamma(1-x) itself overflows (x < -170 or so), where the true
    // reciprocal underflows anyway.
    const double g = lanczos_right(1.0 - x);
    if (std::isinf(g)) return 0.0;
    return std::sin(kPi * x) * g / kPi;
}

}  // namespace fracdimer
