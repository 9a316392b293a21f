// Dense complex linear algebra for 2-, 3-, and 4-dimensional operators:
// value-semantic matrix/vector types, a cyclic complex Jacobi eigensolver for
// Hermitian matrices, partial transpose, trace norm, and a unitary
// matrix-exponential built on the eigendecomposition.
#pragma once

#include <array>
#include <complex>
#include <vector>

namespace fracdimer {

using cplx = std::complex<double>;

class CVector {
public:
    CVector() : dim_(0) {}
    explicit CVector(int dim);

    int dim() const { return dim_; }
    cplx& operator[](int i) { return e_[i]; }
    const cplx& operator[](int i) const { return e_[i]; }

    double norm() const;
    // Conjugated inner product <this|other>.
    cplx dot(const CVector& other) const;
    CVector& operator*=(cplx s);
    CVector& operator+=(const CVector& other);
    void normalize();

private:
    int dim_;
    std::array<cplx, 4> e_{};
};

class CMatrix {
public:
    CMatrix() : dim_(0) {}
    explicit CMatrix(int dim);
    static CMatrix identity(int dim);

    int dim() const { return dim_; }
    cplx& operator()(int i, int j) { return e_[i * 4 + j]; }
    const cplx& operator()(int i, int j) const { return e_[i * 4 + j]; }

    CMatrix adjoint() const;
    CMatrix operator*(const CMatrix& rhs) const;
    CVector operator*(const CVector& v) const;
    CMatrix& operator+=(const CMatrix& rhs);
    CMatrix& operator*=(cplx s);

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_hermitian(double tol) const;

private:
    int dim_;
    std::array<cplx, 16> e_{};
};

struct EigenSystem {
    std::vector<double> eigenvalues;   // ascending
    std::vector<CVector> eigenvectors; // unit norm, same order, phase-fixed
};

// Full orthonormal eigensystem of a Hermitian matrix via cyclic complex Jacobi
// rotations.  Eigenvalues ascend; each eigenvector's first component with
// modulus > 1e-9 is rotated to be real and positive so results are
// bit-reproducible.  Throws not_hermitian_error when ||A - A^dag||_max > 1e-12.
EigenSystem hermitian_eig(const CMatrix& a);

// Partial transpose over the second qubit of a 4x4 two-qubit operator in the
// basis |00>,|01>,|10>,|11>: (i1 i2, j1 j2) -> (i1 j2, j1 i2).
CMatrix partial_transpose_b(const CMatrix& rho);

// Sum of |eigenvalue| over the Hermitian eigendecomposition.
double trace_norm(const CMatrix& a);

// exp(-i H t) for Hermitian H, via U diag(e^{-i lambda t}) U^dag.
CMatrix matrix_exp_unitary(const CMatrix& h, double t);

}  // namespace fracdimer
