#include "fracdimer/qmeasures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fracdimer/errors.hpp"

namespace fracdimer {
namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

void check_density(const CMatrix& rho) {
    if (!rho.is_hermitian(1e-12)) {
        throw invalid_density_matrix_error("density matrix must be Hermitian");
    }
    const cplx tr = rho.trace();
    if (std::abs(tr - cplx(1.0, 0.0)) > 1e-9) {
        throw invalid_density_matrix_error(
            "density matrix trace must be 1, got " + std::to_string(tr.real()));
    }
}

// -sum w log2 w with the [-1e-9, 0] clamp window; rejects eigenvalues below
// the window.
double entropy_from_eigs(const std::vector<double>& w) {
    double s = 0.0;
    for (double x : w) {
        if (x < -1e-9) {
            throw invalid_density_matrix_error(
                "density matrix has eigenvalue " + std::to_string(x));
        }
        if (x <= 0.0) continue;
        s -= x * std::log2(x);
    }
    return std::max(s, 0.0);
}

double entropy_of_diagonal(const CMatrix& rho) {
    std::vector<double> d(rho.dim());
    for (int i = 0; i < rho.dim(); ++i) d[i] = rho(i, i).real();
    return entropy_from_eigs(d);
}

CMatrix sqrt_psd(const CMatrix& rho, const EigenSystem& es) {
    const int n = rho.dim();
    CMatrix s(n);
    for (int k = 0; k < n; ++k) {
        const double r = std::sqrt(std::max(es.eigenvalues[k], 0.0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                s(i, j) += r * es.eigenvectors[k][i] * std::conj(es.eigenvectors[k][j]);
    }
    return s;
}

// (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y): the flip matrix has one
// entry per row, Y_{i, 3-i} = y_i with y = (-1, 1, 1, -1).
CMatrix spin_flipped_conjugate(const CMatrix& rho) {
    static constexpr double y[4] = {-1.0, 1.0, 1.0, -1.0};
    CMatrix out(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out(i, j) = y[i] * y[j] * std::conj(rho(3 - i, 3 - j));
    return out;
}

double concurrence_shared(const CMatrix& rho, const EigenSystem& rho_eig) {
    const CMatrix root = sqrt_psd(rho, rho_eig);
    CMatrix m = root * spin_flipped_conjugate(rho) * root;
    // Hermitian up to roundoff; symmetrize before the solver.
    CMatrix madj = m.adjoint();
    m += madj;
    m *= cplx(0.5, 0.0);
    const EigenSystem es = hermitian_eig(m);
    std::array<double, 4> s{};
    for (int k = 0; k < 4; ++k) s[k] = std::sqrt(std::max(es.eigenvalues[k], 0.0));
    // Ascending from the solver: s[3] is the dominant root.
    return std::max(0.0, s[3] - s[2] - s[1] - s[0]);
}

struct NegativityPair {
    double neg;
    double t_norm;  // ||rho^{T_B}||_1
};

NegativityPair negativity_shared(const CMatrix& rho) {
    const CMatrix pt = partial_transpose_b(rho);
    const EigenSystem es = hermitian_eig(pt);
    double via_eigs = 0.0;
    for (double v : es.eigenvalues) via_eigs += (std::abs(v) - v) * 0.5;
    const double t_norm = trace_norm(pt);
    const double via_norm = (t_norm - 1.0) * 0.5;
    if (std::abs(via_eigs - via_norm) > 1e-10) {
        throw error("negativity routes disagree beyond 1e-10");
    }
    return {via_eigs, t_norm};
}

double log_negativity_shared(const NegativityPair& np) {
    const double via_neg = std::log2(2.0 * np.neg + 1.0);
    const double via_norm = std::log2(np.t_norm);
    if (std::abs(via_neg - via_norm) > 1e-10) {
        throw error("logarithmic negativity routes disagree beyond 1e-10");
    }
    return via_neg;
}

std::array<double, 3> unit_dir(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
            std::cos(theta)};
}

double chsh_objective(const std::array<std::array<double, 3>, 3>& n,
                      const std::array<double, 4>& ang) {
    const std::array<double, 3> b = unit_dir(ang[0], ang[1]);
    const std::array<double, 3> c = unit_dir(ang[2], ang[3]);
    double acc = 0.0;
    for (int sign = 0; sign < 2; ++sign) {
        double norm_sq = 0.0;
        for (int k = 0; k < 3; ++k) {
            double comp = 0.0;
            for (int l = 0; l < 3; ++l) {
                const double v = sign == 0 ? b[l] + c[l] : b[l] - c[l];
                comp += n[k][l] * v;
            }
            norm_sq += comp * comp;
        }
        acc += std::sqrt(norm_sq);
    }
    return acc;
}

}  // namespace

double von_neumann_entropy(const CMatrix& rho) {
    check_density(rho);
    return entropy_from_eigs(hermitian_eig(rho).eigenvalues);
}

double rel_entropy_coherence(const CMatrix& rho) {
    check_density(rho);
    const double s_diag = entropy_of_diagonal(rho);
    const double s = entropy_from_eigs(hermitian_eig(rho).eigenvalues);
    return std::max(0.0, s_diag - s);
}

double negativity(const CMatrix& rho) {
    check_density(rho);
    return negativity_shared(rho).neg;
}

double log_negativity(const CMatrix& rho) {
    check_density(rho);
    return log_negativity_shared(negativity_shared(rho));
}

double concurrence(const CMatrix& rho) {
    check_density(rho);
    const EigenSystem es = hermitian_eig(rho);
    entropy_from_eigs(es.eigenvalues);  // eigenvalue validity gate
    return concurrence_shared(rho, es);
}

CorrelationTensor correlation_tensor(const CMatrix& rho) {
    check_density(rho);
    using P2 = std::array<std::array<cplx, 2>, 2>;
    static const P2 paulis[3] = {
        P2{{{cplx(0, 0), cplx(1, 0)}, {cplx(1, 0), cplx(0, 0)}}},
        P2{{{cplx(0, 0), cplx(0, -1)}, {cplx(0, 1), cplx(0, 0)}}},
        P2{{{cplx(1, 0), cplx(0, 0)}, {cplx(0, 0), cplx(-1, 0)}}},
    };
    CorrelationTensor out;
    for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
            cplx tr = 0.0;
            for (int a1 = 0; a1 < 2; ++a1)
                for (int a2 = 0; a2 < 2; ++a2)
                    for (int b1 = 0; b1 < 2; ++b1)
                        for (int b2 = 0; b2 < 2; ++b2)
                            tr += rho(2 * a1 + a2, 2 * b1 + b2) *
                                  paulis[k][b1][a1] * paulis[l][b2][a2];
            out.n[k][l] = tr.real();
        }
        cplx tu = 0.0, tv = 0.0;
        for (int a1 = 0; a1 < 2; ++a1)
            for (int b1 = 0; b1 < 2; ++b1)
                for (int c = 0; c < 2; ++c) {
                    tu += rho(2 * a1 + c, 2 * b1 + c) * paulis[k][b1][a1];
                    tv += rho(2 * c + a1, 2 * c + b1) * paulis[k][b1][a1];
                }
        out.u[k] = tu.real();
        out.v[k] = tv.real();
    }
    return out;
}

double chsh_max(const CMatrix& rho) {
    const CorrelationTensor ct = correlation_tensor(rho);
    CMatrix k(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double acc = 0.0;
            for (int m = 0; m < 3; ++m) acc += ct.n[m][i] * ct.n[m][j];
            k(i, j) = acc;
        }
    const EigenSystem es = hermitian_eig(k);
    const double top_two = es.eigenvalues[2] + es.eigenvalues[1];
    return 2.0 * std::sqrt(std::max(0.0, top_two));
}

ResourceValues all_measures(const CMatrix& rho) {
    check_density(rho);
    const EigenSystem rho_eig = hermitian_eig(rho);

    ResourceValues out;
    out.entropy = entropy_from_eigs(rho_eig.eigenvalues);
    out.coherence = std::max(0.0, entropy_of_diagonal(rho) - out.entropy);

    const NegativityPair np = negativity_shared(rho);
    out.negativity = np.neg;
    out.log_negativity = log_negativity_shared(np);
    out.concurrence = concurrence_shared(rho, rho_eig);
    out.chsh = chsh_max(rho);
    if (out.chsh > 2.0 + 1e-9 && !(out.concurrence > 0.0)) {
        throw error("CHSH violation without entanglement: inconsistent measures");
    }
    return out;
}

double chsh_brute_force(const CMatrix& rho, int n_samples, unsigned seed) {
    if (n_samples < 1) throw invalid_argument_error("n_samples must be >= 1");
    const CorrelationTensor ct = correlation_tensor(rho);

    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    auto random_angles = [&]() {
        // Uniform directions: cos(theta) uniform in [-1, 1], phi in [0, 2pi).
        return std::array<double, 4>{std::acos(1.0 - 2.0 * uni(gen)),
                                     2.0 * kPi * uni(gen),
                                     std::acos(1.0 - 2.0 * uni(gen)),
                                     2.0 * kPi * uni(gen)};
    };

    std::array<double, 4> best = random_angles();
    double best_val = chsh_objective(ct.n, best);
    for (int s = 1; s < n_samples; ++s) {
        const std::array<double, 4> trial = random_angles();
        const double v = chsh_objective(ct.n, trial);
        if (v > best_val) {
            best_val = v;
            best = trial;
        }
    }

    double step = 0.1;
    while (step > 1e-7) {
        bool improved = false;
        for (int i = 0; i < 4; ++i) {
            for (double dir : {+1.0, -1.0}) {
                std::array<double, 4> trial = best;
                trial[i] += dir * step;
                const double v = chsh_objective(ct.n, trial);
                if (v > best_val) {
                    best_val = v;
                    best = trial;
                    improved = true;
                }
            }
        }
        if (!improved) step *= 0.5;
    }
    return best_val;
}

}  // namespace fracdimer
