// Unit tests for the dense complex vector/matrix kernel and Jacobi eigensolver.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "fracdimer/errors.hpp"
#include "fracdimer/qlinalg.hpp"

using namespace fracdimer;
using cplx = std::complex<double>;

namespace {

CMatrix random_hermitian(int dim, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    CMatrix a(dim);
    for (int i = 0; i < dim; ++i) {
        a(i, i) = cplx(uni(gen), 0.0);
        for (int j = i + 1; j < dim; ++j) {
            const cplx v(uni(gen), uni(gen));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    return a;
}

double frobenius(const CMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

TEST_CASE("dimension checks reject sizes outside 2..4") {
    CHECK_THROWS_AS(CVector(1), invalid_argument_error);
    CHECK_THROWS_AS(CVector(5), invalid_argument_error);
    CHECK_THROWS_AS(CMatrix(1), invalid_argument_error);
    CHECK_THROWS_AS(CMatrix(7), invalid_argument_error);
    CHECK_NOTHROW(CVector(2));
    CHECK_NOTHROW(CVector(3));
    CHECK_NOTHROW(CMatrix(4));
}

TEST_CASE("dot conjugates the left argument and norm is euclidean") {
    CVector x(2), y(2);
    x[0] = cplx(0.0, 1.0);
    y[0] = cplx(1.0, 0.0);
    const cplx d = x.dot(y);
    CHECK(d.real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(d.imag() == doctest::Approx(-1.0).epsilon(1e-15));

    CVector v(2);
    v[0] = cplx(3.0, 0.0);
    v[1] = cplx(0.0, 4.0);
    CHECK(v.norm() == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("matrix-vector and matrix-matrix products") {
    CMatrix a(2);
    a(0, 0) = cplx(0.0, 0.0);
    a(0, 1) = cplx(0.0, -1.0);  // pauli-y
    a(1, 0) = cplx(0.0, 1.0);
    a(1, 1) = cplx(0.0, 0.0);
    CVector e0(2);
    e0[0] = 1.0;
    const CVector w = a * e0;
    CHECK(std::abs(w[0]) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(w[1].imag() == doctest::Approx(1.0).epsilon(1e-15));

    const CMatrix a2 = a * a;  // pauli-y squared = identity
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            CHECK(std::abs(a2(i, j) - (i == j ? cplx(1.0) : cplx(0.0))) < 1e-15);
}

TEST_CASE("hermitian_eig on pauli-x gives -1,+1 with symmetric vectors") {
    CMatrix sx(2);
    sx(0, 1) = 1.0;
    sx(1, 0) = 1.0;
    const EigenSystem es = hermitian_eig(sx);
    CHECK(es.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(es.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // phase convention: first significant component real positive
    CHECK(es.eigenvectors[0][0].real() == doctest::Approx(inv_sqrt2).epsilon(1e-13));
    CHECK(es.eigenvectors[0][1].real() == doctest::Approx(-inv_sqrt2).epsilon(1e-13));
    CHECK(es.eigenvectors[0][0].imag() == doctest::Approx(0.0).epsilon(1e-13));
    CHECK(es.eigenvectors[1][0].real() == doctest::Approx(inv_sqrt2).epsilon(1e-13));
    CHECK(es.eigenvectors[1][1].real() == doctest::Approx(inv_sqrt2).epsilon(1e-13));
}

TEST_CASE("hermitian_eig residuals, ordering and orthonormality on random 4x4") {
    for (unsigned seed = 1; seed <= 20; ++seed) {
        const CMatrix a = random_hermitian(4, seed);
        const EigenSystem es = hermitian_eig(a);
        const double scale = frobenius(a);
        for (int k = 0; k < 4; ++k) {
            const CVector r = a * es.eigenvectors[k];
            double res = 0.0;
            for (int i = 0; i < 4; ++i)
                res += std::norm(r[i] - es.eigenvalues[k] * es.eigenvectors[k][i]);
            CHECK(std::sqrt(res) <= 1e-12 * (1.0 + scale));
            if (k > 0) CHECK(es.eigenvalues[k] >= es.eigenvalues[k - 1]);
        }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                const cplx g = es.eigenvectors[i].dot(es.eigenvectors[j]);
                CHECK(std::abs(g - (i == j ? cplx(1.0) : cplx(0.0))) <= 1e-12);
            }
        // spectral reconstruction
        CMatrix rec(4);
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    rec(i, j) += es.eigenvalues[k] * es.eigenvectors[k][i] *
                                 std::conj(es.eigenvectors[k][j]);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(std::abs(rec(i, j) - a(i, j)) <= 1e-12 * (1.0 + scale));
    }
}

TEST_CASE("hermitian_eig rejects non-hermitian input") {
    CMatrix a(2);
    a(0, 1) = 1.0;  // a(1,0) left zero
    CHECK_THROWS_AS(hermitian_eig(a), not_hermitian_error);
}

TEST_CASE("partial transpose of the bell state has the known spectrum") {
    CMatrix rho(4);
    rho(0, 0) = rho(0, 3) = rho(3, 0) = rho(3, 3) = 0.5;
    const CMatrix pt = partial_transpose_b(rho);
    CHECK(pt(1, 2).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pt(2, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(std::abs(pt(0, 3)) < 1e-15);
    const EigenSystem es = hermitian_eig(pt);
    CHECK(es.eigenvalues[0] == doctest::Approx(-0.5).epsilon(1e-13));
    for (int k = 1; k < 4; ++k)
        CHECK(es.eigenvalues[k] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(trace_norm(pt) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("partial transpose is an involution") {
    const CMatrix a = random_hermitian(4, 77);
    const CMatrix b = partial_transpose_b(partial_transpose_b(a));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(std::abs(a(i, j) - b(i, j)) < 1e-15);
}

TEST_CASE("trace_norm sums absolute eigenvalues") {
    CMatrix d(3);
    d(0, 0) = 1.0;
    d(1, 1) = -2.0;
    d(2, 2) = 0.5;
    CHECK(trace_norm(d) == doctest::Approx(3.5).epsilon(1e-13));
}

TEST_CASE("matrix_exp_unitary reproduces the pauli-x rotation") {
    CMatrix sx(2);
    sx(0, 1) = 1.0;
    sx(1, 0) = 1.0;
    const double t = 3.14159265358979323846 / 2.0;
    const CMatrix u = matrix_exp_unitary(sx, t);  // exp(-i t sx) = -i sx at t = pi/2
    CHECK(std::abs(u(0, 0)) < 1e-13);
    CHECK(u(0, 1).imag() == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(u(1, 0).imag() == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("matrix_exp_unitary is unitary for random hermitian generators") {
    for (unsigned seed = 5; seed <= 8; ++seed) {
        const CMatrix h = random_hermitian(4, seed);
        const CMatrix u = matrix_exp_unitary(h, 2.37);
        CMatrix g(4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                cplx s = 0.0;
                for (int k = 0; k < 4; ++k) s += std::conj(u(k, i)) * u(k, j);
                g(i, j) = s;
            }
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(std::abs(g(i, j) - (i == j ? cplx(1.0) : cplx(0.0))) <= 1e-12);
    }
}
