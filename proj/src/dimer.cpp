#include "fracdimer/dimer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fracdimer/errors.hpp"

namespace fracdimer {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double dot3(const std::array<double, 3>& x, const std::array<double, 3>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

void check_unit(const std::array<double, 3>& v, const char* name) {
    const double n = std::sqrt(dot3(v, v));
    if (std::abs(n - 1.0) > 1e-12) {
        throw invalid_argument_error(std::string(name) +
                                     " must be a unit vector (norm off by " +
                                     std::to_string(n - 1.0) + ")");
    }
}

double residual(const CMatrix& h, const CVector& v, double lambda) {
    CVector r = h * v;
    CVector scaled = v;
    scaled *= cplx(-lambda, 0.0);
    r += scaled;
    return r.norm();
}

// Rotate the first component with modulus > 1e-9 to be real and positive,
// matching the hermitian_eig convention.
void fix_phase(CVector& v) {
    for (int i = 0; i < v.dim(); ++i) {
        const double m = std::abs(v[i]);
        if (m > 1e-9) {
            v *= std::conj(v[i]) / m;
            return;
        }
    }
}

}  // namespace

void DimerParams::validate() const {
    if (!std::isfinite(nu1) || !std::isfinite(nu2) || !std::isfinite(v12) ||
        !std::isfinite(hbar_tau)) {
        throw invalid_argument_error("dimer parameters must be finite");
    }
    if (!(hbar_tau > 0.0)) {
        throw invalid_argument_error("hbar_tau must be positive, got " +
                                     std::to_string(hbar_tau));
    }
}

void GeometryParams::validate() const {
    if (!(gamma1 > 0.0) || !(gamma2 > 0.0)) {
        throw invalid_argument_error("single-molecule rates must be positive");
    }
    if (!(zeta > 0.0)) {
        throw invalid_argument_error("zeta must be positive");
    }
    check_unit(mu_hat1, "mu_hat1");
    check_unit(mu_hat2, "mu_hat2");
    check_unit(r_hat, "r_hat");
}

CMatrix build_hamiltonian(const DimerParams& p) {
    p.validate();
    const double d = p.delta();
    CMatrix h(4);
    h(0, 0) = -p.nu0();
    h(1, 1) = -0.5 * d;
    h(1, 2) = p.v12;
    h(2, 1) = p.v12;
    h(2, 2) = 0.5 * d;
    h(3, 3) = p.nu0();
    return h;
}

DimerEigensystem eigensystem(const DimerParams& p) {
    p.validate();
    const CMatrix h = build_hamiltonian(p);
    const double d = p.delta();
    const double om = p.omega();

    DimerEigensystem out;
    out.energies = {-p.nu0(), -0.5 * om, 0.5 * om, p.nu0()};

    // Corners are exact eigenpairs by construction.
    out.states[0] = CVector(4);
    out.states[0][0] = 1.0;
    out.states[3] = CVector(4);
    out.states[3][3] = 1.0;

    CVector s2(4), s3(4);
    if (p.v12 == 0.0) {
        // Degenerate branch: the central block is already diagonal with
        // entries (-Delta/2, +Delta/2); order them ascending.
        const int lo = (d >= 0.0) ? 1 : 2;
        const int hi = (d >= 0.0) ? 2 : 1;
        s2[lo] = 1.0;
        s3[hi] = 1.0;
    } else {
        // Central-block eigenvectors as (coeff, 1) over (|01>, |10>), using
        // the cancellation-free form of whichever coefficient subtracts.
        double beta, delta_mix;
        if (d >= 0.0) {
            beta = -(d + om) / (2.0 * p.v12);
            delta_mix = 2.0 * p.v12 / (d + om);
        } else {
            beta = -2.0 * p.v12 / (om - d);
            delta_mix = (om - d) / (2.0 * p.v12);
        }
        const double alpha = 1.0 / std::sqrt(1.0 + beta * beta);
        const double gamma = 1.0 / std::sqrt(1.0 + delta_mix * delta_mix);
        out.mix_alpha = alpha;
        out.mix_beta = beta;
        out.mix_gamma = gamma;
        out.mix_delta = delta_mix;
        s2[1] = alpha * beta;
        s2[2] = alpha;
        s3[1] = gamma * delta_mix;
        s3[2] = gamma;
    }
    fix_phase(s2);
    fix_phase(s3);
    out.states[1] = s2;
    out.states[2] = s3;

    // Cross-validate the central pair against the Jacobi solver; on failure
    // the numeric result wins and the fallback flag is raised.
    const bool ok = residual(h, out.states[1], out.energies[1]) <= 1e-10 &&
                    residual(h, out.states[2], out.energies[2]) <= 1e-10;
    if (!ok) {
        const EigenSystem es = hermitian_eig(h);
        // Identify the two central modes: the ones not aligned with the
        // exact corner states.
        int found = 0;
        for (int k = 0; k < 4 && found < 2; ++k) {
            if (std::abs(es.eigenvectors[k][0]) > 0.5 ||
                std::abs(es.eigenvectors[k][3]) > 0.5) {
                continue;
            }
            const int slot = (found == 0) ? 1 : 2;
            out.energies[slot] = es.eigenvalues[k];
            out.states[slot] = es.eigenvectors[k];
            ++found;
        }
        out.numeric_fallback = true;
    }
    return out;
}

CollectiveRates collective_rates(const GeometryParams& g) {
    g.validate();
    if (g.zeta < 1e-4) {
        throw zeta_underflow_error(
            "zeta = " + std::to_string(g.zeta) +
            " is below 1e-4; the exact kernels cancel catastrophically "
            "there, use collective_rates_small_zeta");
    }
    const double a = dot3(g.mu_hat1, g.mu_hat2);
    const double b1 = dot3(g.mu_hat1, g.r_hat);
    const double b2 = dot3(g.mu_hat2, g.r_hat);
    const double z = g.zeta;
    const double s = std::sin(z);
    const double c = std::cos(z);
    const double root = std::sqrt(g.gamma1 * g.gamma2);

    CollectiveRates out;
    out.gamma12 = 1.5 * root *
                  ((a - b1 * b2) * (s / z) +
                   (a - 3.0 * b1 * b2) * (c / (z * z) - s / (z * z * z)));
    out.j12 = 0.75 * root *
              ((b1 * b2 - a) * (c / z) +
               (a - 3.0 * b1 * b2) * (c / (z * z * z) + s / (z * z)));
    return out;
}

CollectiveRates collective_rates_small_zeta(const GeometryParams& g) {
    g.validate();
    const double a = dot3(g.mu_hat1, g.mu_hat2);
    const double b1 = dot3(g.mu_hat1, g.r_hat);
    const double b2 = dot3(g.mu_hat2, g.r_hat);
    const double z = g.zeta;
    const double root = std::sqrt(g.gamma1 * g.gamma2);

    // Kernel expansions about zeta = 0, kept through O(zeta^2):
    //   sin z / z                 =  1 - z^2/6
    //   cos z / z^2 - sin z / z^3 = -1/3 + z^2/30
    //   cos z / z                 =  1/z - z/2
    //   cos z / z^3 + sin z / z^2 =  1/z^3 + 1/(2z) - z/8
    CollectiveRates out;
    out.gamma12 = 1.5 * root *
                  ((a - b1 * b2) * (1.0 - z * z / 6.0) +
                   (a - 3.0 * b1 * b2) * (-1.0 / 3.0 + z * z / 30.0));
    out.j12 = 0.75 * root *
              ((b1 * b2 - a) * (1.0 / z - 0.5 * z) +
               (a - 3.0 * b1 * b2) *
                   (1.0 / (z * z * z) + 0.5 / z - z / 8.0));
    return out;
}

double emission_rate(double freq, double dipole_sq, double refr_index) {
    if (!(freq > 0.0) || !(dipole_sq > 0.0) || !(refr_index > 0.0)) {
        throw invalid_argument_error(
            "emission_rate requires positive frequency, squared dipole, and "
            "refractive index");
    }
    return refr_index * freq * freq * freq * dipole_sq / (3.0 * kPi);
}

}  // namespace fracdimer
