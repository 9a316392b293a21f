// Two-site dimer Hamiltonian in the basis |00>,|01>,|10>,|11>, its analytic
// eigensystem (with a numeric Jacobi cross-check), and the dipole-dipole
// geometric rates.
#pragma once

#include <array>
#include <cmath>

#include "fracdimer/qlinalg.hpp"

namespace fracdimer {

struct DimerParams {
    double nu1 = 0.0;      // site-1 transition frequency
    double nu2 = 0.0;      // site-2 transition frequency
    double v12 = 0.0;      // dipole-dipole coupling strength
    double hbar_tau = 1.0; // fractional Planck constant (> 0)

    double nu0() const { return 0.5 * (nu1 + nu2); }     // mean frequency
    double delta() const { return nu1 - nu2; }           // detuning
    double omega() const {                               // single-excitation gap
        return std::hypot(2.0 * v12, delta());
    }
    void validate() const;  // hbar_tau > 0, all entries finite
};

struct GeometryParams {
    double gamma1 = 1.0;  // single-molecule decay rates (> 0)
    double gamma2 = 1.0;
    std::array<double, 3> mu_hat1{1.0, 0.0, 0.0};  // dipole orientations, unit
    std::array<double, 3> mu_hat2{1.0, 0.0, 0.0};
    std::array<double, 3> r_hat{0.0, 0.0, 1.0};    // separation direction, unit
    double zeta = 1.0;  // n * k * r12  (> 0)

    void validate() const;
};

// Energies and states in the structural order (-nu0, -Omega/2, +Omega/2,
// +nu0); note this is ascending only when nu0 >= Omega/2.  mix_* are the 2x2
// central-block eigenvector coefficients: state2 ~ (mix_beta, 1) and
// state3 ~ (mix_delta, 1) over (|01>, |10>), each normalized by mix_alpha
// resp. mix_gamma.  numeric_fallback is set if the closed form failed its
// residual check and the Jacobi result was taken instead.
struct DimerEigensystem {
    std::array<double, 4> energies{};
    std::array<CVector, 4> states{};
    double mix_alpha = 1.0;
    double mix_beta = 0.0;
    double mix_gamma = 1.0;
    double mix_delta = 0.0;
    bool numeric_fallback = false;
};

struct CollectiveRates {
    double gamma12 = 0.0;  // collective radiative decay rate
    double j12 = 0.0;      // coherent dipole-dipole shift
};

// 4x4 real-symmetric Hamiltonian: corners -/+ nu0, central block
// [[-Delta/2, V12], [V12, +Delta/2]].
CMatrix build_hamiltonian(const DimerParams& p);

// Closed-form eigensystem, cross-validated against hermitian_eig.
DimerEigensystem eigensystem(const DimerParams& p);

// Exact kernels; throws zeta_underflow_error for zeta < 1e-4 where the
// kernel differences cancel catastrophically (use the series helper there).
CollectiveRates collective_rates(const GeometryParams& g);

// Small-zeta series of the same rates to O(zeta^2); valid for zeta << 1.
CollectiveRates collective_rates_small_zeta(const GeometryParams& g);

// Single-molecule emission rate n f^3 d^2 / (3 pi) in natural units
// (eps0 = hbar = c = 1).
double emission_rate(double freq, double dipole_sq, double refr_index);

}  // namespace fracdimer
