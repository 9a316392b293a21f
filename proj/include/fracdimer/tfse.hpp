// Time-fractional evolution of the dimer: eigenmode expansion through the
// Mittag-Leffler function, state renormalization into a density matrix, and
// an independent Caputo predictor-corrector integrator used as a validation
// oracle.
#pragma once

#include <array>
#include <vector>

#include "fracdimer/dimer.hpp"
#include "fracdimer/mlfunc.hpp"
#include "fracdimer/qlinalg.hpp"

namespace fracdimer {

enum class StateKind { ground_excited, single_excitation, custom };

struct InitialState {
    StateKind kind = StateKind::single_excitation;
    double p = 0.0;          // population weight in [0, 1]
    CVector custom_vector{}; // used only when kind == custom; unit norm

    // The 4-component amplitude vector over |00>,|01>,|10>,|11>:
    //   ground_excited    -> p|00> + sqrt(1-p^2)|11>
    //   single_excitation -> p|01> + sqrt(1-p^2)|10>
    CVector amplitudes() const;  // validates
};

struct EvolvedState {
    double t;
    FractionalOrder tau;
    std::array<cplx, 4> amplitudes{};  // chi_1..chi_4, unnormalized
    double norm_sq = 1.0;              // N = sum |chi_j|^2
};

struct DensityMatrix {
    CMatrix rho;
    double purity = 1.0;  // trace(rho^2)
};

// C_j = <Phi_j|Psi(0)> against the verified eigenvectors.
std::array<cplx, 4> decompose_initial(const InitialState& state,
                                      const DimerEigensystem& eig);

// chi(t) = sum_j C_j E_tau(lambda_j t^tau) Phi_j with
// lambda_j = eps_j e^{-i pi tau / 2} / hbar_tau; at tau = 1 this reduces to
// the ordinary e^{-i eps_j t} phases.  Throws norm_collapse_error if the
// squared norm falls below 1e-300.
EvolvedState evolve(const InitialState& state, const DimerParams& params,
                    FractionalOrder tau, double t);

// rho = |chi><chi| / N over the full 4-dimensional amplitude vector.
DensityMatrix density_matrix(const EvolvedState& es);

// Adams-Bashforth-Moulton predictor-corrector for the Caputo system
// d^tau y / dt^tau = A y, product-trapezoidal weights, one predictor plus
// two corrector passes per step.  Integrates once at the requested
// resolution and once at half the step; if they disagree beyond 1e-2 throws
// step_size_too_coarse_error, otherwise returns the fine run interpolated
// onto t_grid.  Pure validation oracle -- never used by evolve.
std::vector<CVector> caputo_oracle_solve(const CMatrix& a, const CVector& y0,
                                         FractionalOrder tau,
                                         const std::vector<double>& t_grid,
                                         int steps_per_unit);

}  // namespace fracdimer
