// Resource measures on a two-qubit density matrix: von Neumann entropy,
// relative entropy of coherence, negativity and logarithmic negativity (each
// by two independent routes, cross-asserted), Wootters concurrence, and the
// CHSH maximum via the correlation-tensor criterion plus a direct
// angle-search maximizer for validation.
#pragma once

#include <array>

#include "fracdimer/qlinalg.hpp"

namespace fracdimer {

struct CorrelationTensor {
    // n[k][l] = Tr(rho tau_k (x) tau_l) over Pauli x, y, z.
    std::array<std::array<double, 3>, 3> n{};
    // Single-qubit Bloch vectors u_k = Tr(rho tau_k (x) I), v_l likewise on
    // the second qubit; diagnostic only.
    std::array<double, 3> u{};
    std::array<double, 3> v{};
};

struct ResourceValues {
    double coherence = 0.0;       // relative entropy of coherence, bits
    double entropy = 0.0;         // von Neumann entropy, bits
    double negativity = 0.0;      // in [0, 1/2]
    double log_negativity = 0.0;  // in [0, 1]
    double concurrence = 0.0;     // in [0, 1]
    double chsh = 0.0;            // in [0, 2 sqrt 2]
};

// All functions validate their input (unit trace to 1e-9, eigenvalues
// >= -1e-9, Hermitian) and throw invalid_density_matrix_error otherwise.
double von_neumann_entropy(const CMatrix& rho);
double rel_entropy_coherence(const CMatrix& rho);
double negativity(const CMatrix& rho);
double log_negativity(const CMatrix& rho);
double concurrence(const CMatrix& rho);
CorrelationTensor correlation_tensor(const CMatrix& rho);
double chsh_max(const CMatrix& rho);

// Single pass over shared eigendecompositions.
ResourceValues all_measures(const CMatrix& rho);

// Direct maximization of the CHSH value over measurement directions:
// n_samples random (b, b') pairs (deterministic for a fixed seed) followed
// by coordinate hill climbing; the first party's optimal directions are
// closed-form.  Lower-bounds chsh_max; used to validate it.
double chsh_brute_force(const CMatrix& rho, int n_samples, unsigned seed);

}  // namespace fracdimer
