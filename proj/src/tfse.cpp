#include "fracdimer/tfse.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracdimer/errors.hpp"
#include "fracdimer/gamma.hpp"

namespace fracdimer {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// One full ABM (predictor + two corrector passes) integration of
// d^tau y = A y on n_steps uniform steps covering [0, t_end].
std::vector<CVector> abm_run(const CMatrix& a, const CVector& y0, double tau,
                             double t_end, int n_steps) {
    const int dim = y0.dim();
    const double h = t_end / n_steps;
    const double h_tau = std::pow(h, tau);
    const double w_pred = h_tau * recip_gamma(tau + 1.0);
    const double w_corr = h_tau * recip_gamma(tau + 2.0);

    // m^tau and m^(tau+1) for every lag the quadrature weights need.
    std::vector<double> pow_t(n_steps + 2), pow_t1(n_steps + 2);
    for (int m = 0; m <= n_steps + 1; ++m) {
        pow_t[m] = std::pow(static_cast<double>(m), tau);
        pow_t1[m] = std::pow(static_cast<double>(m), tau + 1.0);
    }

    std::vector<CVector> y(n_steps + 1, CVector(dim));
    std::vector<CVector> f(n_steps + 1, CVector(dim));
    y[0] = y0;
    f[0] = a * y0;

    for (int n = 0; n < n_steps; ++n) {
        // Predictor: y0 + w_pred * sum_j [(n+1-j)^tau - (n-j)^tau] f_j.
        CVector acc(dim);
        for (int j = 0; j <= n; ++j) {
            const double b = pow_t[n + 1 - j] - pow_t[n - j];
            CVector term = f[j];
            term *= cplx(b, 0.0);
            acc += term;
        }
        CVector yp = y0;
        acc *= cplx(w_pred, 0.0);
        yp += acc;

        // History part of the corrector, reused by both passes:
        // a_0 = n^(tau+1) - (n - tau)(n+1)^tau,
        // a_j = (n-j+2)^(tau+1) + (n-j)^(tau+1) - 2 (n-j+1)^(tau+1).
        CVector hist(dim);
        {
            const double a0 = pow_t1[n] - (n - tau) * pow_t[n + 1];
            CVector term = f[0];
            term *= cplx(a0, 0.0);
            hist += term;
        }
        for (int j = 1; j <= n; ++j) {
            const double aj =
                pow_t1[n - j + 2] + pow_t1[n - j] - 2.0 * pow_t1[n - j + 1];
            CVector term = f[j];
            term *= cplx(aj, 0.0);
            hist += term;
        }

        CVector ynext = yp;
        for (int pass = 0; pass < 2; ++pass) {
            CVector rhs = a * ynext;
            rhs += hist;
            rhs *= cplx(w_corr, 0.0);
            ynext = y0;
            ynext += rhs;
        }
        y[n + 1] = ynext;
        f[n + 1] = a * ynext;
    }
    return y;
}

double max_component_dev(const CVector& x, const CVector& y) {
    double m = 0.0;
    for (int i = 0; i < x.dim(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
    return m;
}

// Linear interpolation of a uniform-grid trajectory at time t.
CVector interp(const std::vector<CVector>& y, double t_end, double t) {
    const int n_steps = static_cast<int>(y.size()) - 1;
    const double x = std::clamp(t / t_end, 0.0, 1.0) * n_steps;
    const int i = std::min(static_cast<int>(x), n_steps - 1);
    const double frac = x - i;
    CVector out = y[i];
    out *= cplx(1.0 - frac, 0.0);
    CVector hi = y[i + 1];
    hi *= cplx(frac, 0.0);
    out += hi;
    return out;
}

}  // namespace

CVector InitialState::amplitudes() const {
    if (kind == StateKind::custom) {
        if (custom_vector.dim() != 4) {
            throw invalid_argument_error("custom initial state must have 4 components");
        }
        if (std::abs(custom_vector.norm() - 1.0) > 1e-12) {
            throw invalid_argument_error("custom initial state must be unit norm");
        }
        return custom_vector;
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw invalid_argument_error("p must lie in [0, 1], got " +
                                     std::to_string(p));
    }
    const double q = std::sqrt(1.0 - p * p);
    CVector v(4);
    if (kind == StateKind::ground_excited) {
        v[0] = p;
        v[3] = q;
    } else {
        v[1] = p;
        v[2] = q;
    }
    return v;
}

std::array<cplx, 4> decompose_initial(const InitialState& state,
                                      const DimerEigensystem& eig) {
    const CVector psi0 = state.amplitudes();
    std::array<cplx, 4> c{};
    for (int j = 0; j < 4; ++j) c[j] = eig.states[j].dot(psi0);
    return c;
}

EvolvedState evolve(const InitialState& state, const DimerParams& params,
                    FractionalOrder tau, double t) {
    if (!(t >= 0.0)) throw invalid_argument_error("t must be >= 0");
    params.validate();
    const DimerEigensystem eig = eigensystem(params);
    const std::array<cplx, 4> c = decompose_initial(state, eig);

    const double tv = tau.value();
    const double t_pow = std::pow(t, tv);
    EvolvedState out{t, tau, {}, 0.0};
    for (int j = 0; j < 4; ++j) {
        if (c[j] == cplx(0.0, 0.0)) continue;
        const double eps = eig.energies[j];
        // lambda_j t^tau on the principal ray: positive-energy modes sit at
        // arg = -pi tau/2, negative-energy ones at the reflected pi(1 - tau/2).
        const double mag = std::abs(eps) * t_pow / params.hbar_tau;
        const double ang = (eps >= 0.0) ? -0.5 * kPi * tv : kPi * (1.0 - 0.5 * tv);
        const cplx z = std::polar(mag, ang);
        const cplx e_val = ml_eval(z, tv).value;
        const cplx w = c[j] * e_val;
        for (int i = 0; i < 4; ++i) out.amplitudes[i] += w * eig.states[j][i];
    }
    double ns = 0.0;
    for (const cplx& x : out.amplitudes) ns += std::norm(x);
    if (!(ns >= 1e-300)) {
        throw norm_collapse_error("state norm collapsed at t = " +
                                  std::to_string(t));
    }
    out.norm_sq = ns;
    return out;
}

DensityMatrix density_matrix(const EvolvedState& es) {
    if (!(es.norm_sq > 0.0)) {
        throw norm_collapse_error("density matrix requires positive norm");
    }
    DensityMatrix out{CMatrix(4), 0.0};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out.rho(i, j) =
                es.amplitudes[i] * std::conj(es.amplitudes[j]) / es.norm_sq;
        }
    }
    // Rank-1 by construction, so trace(rho^2) = (sum |chi|^2 / N)^2; compute
    // it from the matrix anyway as a self-check value.
    cplx tr2 = (out.rho * out.rho).trace();
    out.purity = tr2.real();
    return out;
}

std::vector<CVector> caputo_oracle_solve(const CMatrix& a, const CVector& y0,
                                         FractionalOrder tau,
                                         const std::vector<double>& t_grid,
                                         int steps_per_unit) {
    if (t_grid.empty() || t_grid.front() != 0.0) {
        throw invalid_argument_error("t_grid must start at 0");
    }
    if (!std::is_sorted(t_grid.begin(), t_grid.end())) {
        throw invalid_argument_error("t_grid must be ascending");
    }
    if (steps_per_unit < 100) {
        throw invalid_argument_error("steps_per_unit must be >= 100");
    }
    if (a.dim() != y0.dim()) {
        throw invalid_argument_error("matrix and state dimensions differ");
    }
    const double t_end = t_grid.back();
    if (t_end == 0.0) return std::vector<CVector>(t_grid.size(), y0);

    const int n_coarse = std::max(2, static_cast<int>(std::ceil(t_end * steps_per_unit)));
    const std::vector<CVector> coarse = abm_run(a, y0, tau.value(), t_end, n_coarse);
    const std::vector<CVector> fine = abm_run(a, y0, tau.value(), t_end, 2 * n_coarse);

    double dev = 0.0;
    for (double t : t_grid) {
        dev = std::max(dev, max_component_dev(interp(coarse, t_end, t),
                                              interp(fine, t_end, t)));
    }
    if (dev > 1e-2) {
        throw step_size_too_coarse_error(
            "refinement disagreement " + std::to_string(dev) +
            " exceeds 1e-2; increase steps_per_unit");
    }

    std::vector<CVector> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) out.push_back(interp(fine, t_end, t));
    return out;
}

}  // namespace fracdimer
