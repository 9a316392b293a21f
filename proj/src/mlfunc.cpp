#include "fracdimer/mlfunc.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fracdimer/errors.hpp"
#include "fracdimer/gamma.hpp"

namespace fracdimer {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kSeriesCap = 2000;
constexpr int kExtendedCap = 10000;
constexpr int kAsymScanMax = 200;

void validate_order_params(double alpha, double beta) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw invalid_argument_error("alpha must be positive and finite");
    }
    if (!std::isfinite(beta)) {
        throw invalid_argument_error("beta must be finite");
    }
}

// ln|z^{-k} / Gamma(beta - alpha k)|.  lgamma returns +inf at the Gamma
// poles, so an exactly-zero coefficient comes out as -inf.
double log_asym_term(double log_az, double alpha, double beta, int k) {
    return -k * log_az - std::lgamma(beta - alpha * k);
}

// Sign of 1/Gamma(w).  Only meaningful for nonzero coefficients.
double recip_gamma_sign(double w) {
    if (w >= 0.5) return 1.0;
    return std::sin(kPi * w) >= 0.0 ? 1.0 : -1.0;
}

struct AsymPlan {
    int n_terms = 0;          // optimal truncation depth within the scan window
    double log_est = -kInf;   // ln of the first omitted nonzero term
    double log_exp_mag = -kInf;  // ln of the exponential part's magnitude
};

AsymPlan plan_asymptotic(cplx z, double alpha, double beta) {
    const double az = std::abs(z);
    const double log_az = std::log(az);
    AsymPlan plan;
    double best = kInf;
    for (int k = 1; k <= kAsymScanMax; ++k) {
        const double lg = log_asym_term(log_az, alpha, beta, k);
        if (lg == -kInf) continue;  // zero coefficient, cannot truncate here
        if (lg < best) {
            best = lg;
            plan.n_terms = k;
        }
    }
    for (int k = plan.n_terms + 1; k <= plan.n_terms + 10; ++k) {
        const double lg = log_asym_term(log_az, alpha, beta, k);
        if (lg != -kInf) {
            plan.log_est = lg;
            break;
        }
    }
    if (std::abs(std::arg(z)) <= alpha * kPi + 1e-12) {
        const cplx w = std::pow(z, 1.0 / alpha);
        plan.log_exp_mag =
            w.real() + ((1.0 - beta) / alpha) * log_az - std::log(alpha);
    }
    return plan;
}

// Expansion about infinity with exactly n_terms algebraic terms; no domain
// floor (the dispatcher calls it wherever the error model approves).
MLResult asymptotic_eval(cplx z, double alpha, double beta, int n_terms) {
    const double az = std::abs(z);
    const double log_az = std::log(az);
    const double argz = std::arg(z);

    MLResult out;
    out.regime = MLRegime::asymptotic;

    cplx sum = 0.0;
    const cplx zinv = 1.0 / z;
    cplx p = 1.0;
    for (int k = 1; k <= n_terms; ++k) {
        p *= zinv;
        const double lg = log_asym_term(log_az, alpha, beta, k);
        if (lg == -kInf) continue;  // coefficient sits on a Gamma pole
        if (lg > 700.0) break;      // divergent tail, past any sane truncation
        if (lg < -745.0) continue;  // below double underflow
        const double w = beta - alpha * k;
        const double rg = recip_gamma(w);
        if (rg != 0.0 && std::isfinite(rg) && std::abs(p) > 0.0) {
            sum += p * rg;
        } else {
            // Factors left double range individually; rebuild from logs.
            sum += std::polar(std::exp(lg), -k * argz) * recip_gamma_sign(w);
        }
    }

    cplx value = -sum;
    if (std::abs(argz) <= alpha * kPi + 1e-12) {
        const cplx w1 = std::pow(z, 1.0 / alpha);
        const cplx pref =
            (beta == 1.0) ? cplx(1.0, 0.0) : std::pow(z, (1.0 - beta) / alpha);
        value += pref * std::exp(w1) / alpha;
    }
    out.value = value;

    // First omitted nonzero term, the standard truncation-error heuristic.
    out.est_error = 0.0;
    for (int k = n_terms + 1; k <= n_terms + 10; ++k) {
        const double lg = log_asym_term(log_az, alpha, beta, k);
        if (lg != -kInf) {
            out.est_error = std::exp(std::min(lg, 700.0));
            break;
        }
    }
    return out;
}

// Minimal RAII wrapper so every exit path releases MPFR state.
class MpReal {
public:
    explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    ~MpReal() { mpfr_clear(v_); }
    MpReal(const MpReal&) = delete;
    MpReal& operator=(const MpReal&) = delete;
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace

FractionalOrder::FractionalOrder(double tau) : tau_(tau) {
    if (!(tau > 0.0 && tau <= 1.0)) {
        throw invalid_argument_error("fractional order must lie in (0, 1], got " +
                                     std::to_string(tau));
    }
}

MLResult ml_series(cplx z, double alpha, double beta, double tol) {
    validate_order_params(alpha, beta);
    if (!(tol > 0.0)) throw invalid_argument_error("tol must be positive");

    MLResult out;
    out.regime = MLRegime::series;

    cplx sum = 0.0;
    cplx comp = 0.0;  // Kahan compensation
    cplx pow_z = 1.0;
    double sum_abs = 0.0;
    double max_abs = 0.0;
    double last_abs = 0.0;
    int below = 0;
    int used = -1;
    for (int k = 0; k < kSeriesCap; ++k) {
        const cplx term = pow_z * recip_gamma(alpha * k + beta);
        const cplx y = term - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        const double a_term = std::abs(term);
        sum_abs += a_term;
        max_abs = std::max(max_abs, a_term);
        last_abs = a_term;
        if (a_term < tol * std::abs(sum)) {
            if (++below >= 2) {
                used = k + 1;
                break;
            }
        } else {
            below = 0;
        }
        pow_z *= z;
    }
    if (used < 0) {
        throw non_convergent_error(
            "power series did not meet its stop rule within 2000 terms");
    }
    out.value = sum;
    const double a_sum = std::abs(sum);
    // Truncation estimate plus the honest accumulation noise floor: the
    // coefficient routine is good to ~2.5e-13 relative and each add
    // contributes O(eps) of the absolute-value mass.
    out.est_error = std::max(last_abs, (2.5e-13 + 5e-16 * used) * sum_abs);
    out.precision_loss = (max_abs > 1e12 * a_sum);
    return out;
}

MLResult ml_asymptotic(cplx z, double alpha, double beta, int n_terms) {
    validate_order_params(alpha, beta);
    if (!(alpha <= 1.0)) {
        throw invalid_argument_error("asymptotic expansion requires alpha <= 1");
    }
    if (n_terms < 0) throw invalid_argument_error("n_terms must be >= 0");
    if (std::abs(z) < series_radius) {
        throw out_of_domain_error(
            "asymptotic expansion needs |z| >= " + std::to_string(series_radius));
    }
    return asymptotic_eval(z, alpha, beta, n_terms);
}

namespace detail {

MLResult ml_series_extended(cplx z, double alpha, double beta) {
    validate_order_params(alpha, beta);
    if (z == cplx(0.0, 0.0)) {
        return {cplx(recip_gamma(beta), 0.0), 0.0, MLRegime::series, false};
    }

    // Working precision sized to absorb the e^{X} cancellation of the series,
    // X = |z|^{1/alpha}, with headroom for accumulation noise.
    const double x_scale = std::pow(std::abs(z), 1.0 / alpha);
    const long xbits = static_cast<long>(std::ceil(1.4427 * std::min(x_scale, 4e4)));
    const mpfr_prec_t prec =
        static_cast<mpfr_prec_t>(std::clamp(96L + xbits, 96L, 65536L));

    MpReal zr(prec), zi(prec), pr(prec), pim(prec), sr(prec), si(prec);
    MpReal w(prec), g(prec), rg(prec), tr(prec), ti(prec);
    MpReal t1(prec), t2(prec), abs_t(prec), abs_s(prec), max_t(prec), thr(prec);

    mpfr_set_d(zr.get(), z.real(), MPFR_RNDN);
    mpfr_set_d(zi.get(), z.imag(), MPFR_RNDN);
    mpfr_set_ui(pr.get(), 1, MPFR_RNDN);
    mpfr_set_ui(pim.get(), 0, MPFR_RNDN);
    mpfr_set_ui(sr.get(), 0, MPFR_RNDN);
    mpfr_set_ui(si.get(), 0, MPFR_RNDN);
    mpfr_set_ui(max_t.get(), 0, MPFR_RNDN);

    double last_term = 0.0;
    int below = 0;
    bool converged = false;
    for (int k = 0; k < kExtendedCap; ++k) {
        if (k > 0) {
            // p <- p * z
            mpfr_mul(t1.get(), pr.get(), zr.get(), MPFR_RNDN);
            mpfr_mul(t2.get(), pim.get(), zi.get(), MPFR_RNDN);
            mpfr_sub(t1.get(), t1.get(), t2.get(), MPFR_RNDN);
            mpfr_mul(t2.get(), pr.get(), zi.get(), MPFR_RNDN);
            mpfr_mul(thr.get(), pim.get(), zr.get(), MPFR_RNDN);
            mpfr_add(t2.get(), t2.get(), thr.get(), MPFR_RNDN);
            mpfr_set(pr.get(), t1.get(), MPFR_RNDN);
            mpfr_set(pim.get(), t2.get(), MPFR_RNDN);
        }
        mpfr_set_d(w.get(), alpha, MPFR_RNDN);
        mpfr_mul_ui(w.get(), w.get(), static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_add_d(w.get(), w.get(), beta, MPFR_RNDN);
        if (mpfr_sgn(w.get()) <= 0 && mpfr_integer_p(w.get())) {
            continue;  // coefficient sits on a Gamma pole: exact zero
        }
        mpfr_gamma(g.get(), w.get(), MPFR_RNDN);
        mpfr_ui_div(rg.get(), 1, g.get(), MPFR_RNDN);

        mpfr_mul(tr.get(), pr.get(), rg.get(), MPFR_RNDN);
        mpfr_mul(ti.get(), pim.get(), rg.get(), MPFR_RNDN);
        mpfr_add(sr.get(), sr.get(), tr.get(), MPFR_RNDN);
        mpfr_add(si.get(), si.get(), ti.get(), MPFR_RNDN);

        mpfr_abs(t1.get(), tr.get(), MPFR_RNDN);
        mpfr_abs(t2.get(), ti.get(), MPFR_RNDN);
        mpfr_add(abs_t.get(), t1.get(), t2.get(), MPFR_RNDN);
        if (mpfr_cmp(abs_t.get(), max_t.get()) > 0) {
            mpfr_set(max_t.get(), abs_t.get(), MPFR_RNDN);
        }

        mpfr_abs(t1.get(), sr.get(), MPFR_RNDN);
        mpfr_abs(t2.get(), si.get(), MPFR_RNDN);
        mpfr_add(abs_s.get(), t1.get(), t2.get(), MPFR_RNDN);
        mpfr_add_ui(abs_s.get(), abs_s.get(), 1, MPFR_RNDN);
        mpfr_mul_2si(thr.get(), abs_s.get(), -(prec - 8), MPFR_RNDN);

        if (mpfr_cmp(abs_t.get(), thr.get()) < 0) {
            if (++below >= 2) {
                last_term = mpfr_get_d(abs_t.get(), MPFR_RNDN);
                converged = true;
                break;
            }
        } else {
            below = 0;
        }
    }
    if (!converged) {
        throw non_convergent_error(
            "extended-precision series did not meet its stop rule within "
            "10000 terms");
    }

    MLResult out;
    out.regime = MLRegime::series;
    out.value = cplx(mpfr_get_d(sr.get(), MPFR_RNDN),
                     mpfr_get_d(si.get(), MPFR_RNDN));
    mpfr_mul_2si(t1.get(), max_t.get(), -(prec - 8), MPFR_RNDN);
    out.est_error = std::max(last_term, mpfr_get_d(t1.get(), MPFR_RNDN));
    return out;
}

}  // namespace detail

MLResult ml_eval(cplx z, double alpha, double beta) {
    const FractionalOrder order(alpha);  // rejects alpha outside (0, 1]
    if (!std::isfinite(beta)) throw invalid_argument_error("beta must be finite");
    if (z == cplx(0.0, 0.0)) {
        return {cplx(recip_gamma(beta), 0.0), 0.0, MLRegime::series, false};
    }

    const double x_scale = std::pow(std::abs(z), 1.0 / alpha);
    if (x_scale <= 6.0) {
        // Cancellation is mild: the double-precision series is cheapest.
        // Accept it only if its own error report clears the quality bar.
        MLResult r = ml_series(z, alpha, beta, 1e-16);
        if (r.est_error <= 1e-11 * (1.0 + std::abs(r.value))) return r;
        return detail::ml_series_extended(z, alpha, beta);
    }

    const AsymPlan plan = plan_asymptotic(z, alpha, beta);
    const double budget =
        std::log(3e-12) + std::max(0.0, plan.log_exp_mag);
    if (plan.log_est <= budget) {
        return asymptotic_eval(z, alpha, beta, plan.n_terms);
    }
    return detail::ml_series_extended(z, alpha, beta);
}

}  // namespace fracdimer
