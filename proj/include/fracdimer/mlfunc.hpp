// Mittag-Leffler function E_{alpha,beta}(z) for complex arguments, with
// regime dispatch between the defining power series, its exponentially
// improved asymptotic expansion, and an arbitrary-precision series fallback
// for the cancellation band between them.
#pragma once

#include <complex>

#include "fracdimer/qlinalg.hpp"

namespace fracdimer {

// Fractional derivative order: validated to lie in (0, 1], with 1 being the
// ordinary (unitary) limit.
class FractionalOrder {
public:
    explicit FractionalOrder(double tau);
    double value() const { return tau_; }

private:
    double tau_;
};

enum class MLRegime { series, asymptotic, integral };

struct MLResult {
    cplx value{0.0, 0.0};
    double est_error = 0.0;  // estimated absolute error (heuristic, not a bound)
    MLRegime regime = MLRegime::series;
    bool precision_loss = false;  // cancellation beyond 1e12 detected in-sum
};

// Radii framing the dispatch overlap annulus.  Direct ml_series callers
// should keep |z| <= series_radius: beyond it the double-precision series
// still runs but cancellation degrades the result (est_error stays honest).
inline constexpr double series_radius = 5.0;
inline constexpr double asymptotic_radius = 12.0;

// Defining series sum_{k>=0} z^k / Gamma(alpha k + beta), Kahan-compensated,
// truncated when |term| < tol*|sum| twice in a row.  Caps at 2000 terms and
// throws non_convergent_error if the stop rule never fires.
MLResult ml_series(cplx z, double alpha, double beta, double tol);

// Exponentially improved expansion about infinity with exactly n_terms
// algebraic terms; the exp(z^{1/alpha}) part is included through its full
// sector |arg z| <= alpha*pi (decaying past alpha*pi/2).  Requires
// |z| >= series_radius (the useful floor shrinks with alpha; enforcement is
// left at the annulus edge so the overlap is publicly reachable).
MLResult ml_asymptotic(cplx z, double alpha, double beta, int n_terms);

// Entry point used by the rest of the library: picks whichever regime the
// a-priori error model predicts will reach near machine precision, falling
// back to an extended-precision series in the cancellation band.
MLResult ml_eval(cplx z, double alpha, double beta = 1.0);

namespace detail {

// Power series evaluated in MPFR arithmetic with working precision scaled to
// the cancellation magnitude e^{|z|^{1/alpha}}.  Caps at 10000 terms.
// Exposed for cross-validation in tests.
MLResult ml_series_extended(cplx z, double alpha, double beta);

}  // namespace detail

}  // namespace fracdimer
