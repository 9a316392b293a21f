#include "fracdimer/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fracdimer/errors.hpp"

namespace fracdimer {
namespace {

void check_dim(int dim) {
    if (dim < 2 || dim > 4) {
        throw invalid_argument_error("dimension must be 2, 3, or 4, got " +
                                     std::to_string(dim));
    }
}

}  // namespace

CVector::CVector(int dim) : dim_(dim) { check_dim(dim); }

double CVector::norm() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i) s += std::norm(e_[i]);
    return std::sqrt(s);
}

cplx CVector::dot(const CVector& other) const {
    cplx s = 0.0;
    for (int i = 0; i < dim_; ++i) s += std::conj(e_[i]) * other.e_[i];
    return s;
}

CVector& CVector::operator*=(cplx s) {
    for (int i = 0; i < dim_; ++i) e_[i] *= s;
    return *this;
}

CVector& CVector::operator+=(const CVector& other) {
    for (int i = 0; i < dim_; ++i) e_[i] += other.e_[i];
    return *this;
}

void CVector::normalize() {
    const double n = norm();
    if (n > 0.0) *this *= cplx(1.0 / n, 0.0);
}

CMatrix::CMatrix(int dim) : dim_(dim) { check_dim(dim); }

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
    return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
    CMatrix m(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < dim_; ++k) s += (*this)(i, k) * rhs(k, j);
            m(i, j) = s;
        }
    return m;
}

CVector CMatrix::operator*(const CVector& v) const {
    CVector out(dim_);
    for (int i = 0; i < dim_; ++i) {
        cplx s = 0.0;
        for (int k = 0; k < dim_; ++k) s += (*this)(i, k) * v[k];
        out[i] = s;
    }
    return out;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) (*this)(i, j) += rhs(i, j);
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) (*this)(i, j) *= s;
    return *this;
}

cplx CMatrix::trace() const {
    cplx s = 0.0;
    for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
    return s;
}

double CMatrix::frobenius_norm() const {
    double s = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s += std::norm((*this)(i, j));
    return std::sqrt(s);
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) m = std::max(m, std::abs((*this)(i, j)));
    return m;
}

bool CMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eig(const CMatrix& input) {
    check_dim(input.dim());
    if (!input.is_hermitian(1e-12)) {
        throw not_hermitian_error("matrix is not Hermitian within 1e-12");
    }
    const int n = input.dim();
    CMatrix a = input;
    CMatrix v = CMatrix::identity(n);
    const double scale = a.frobenius_norm();
    const double threshold = 1e-14 * scale;

    bool converged = (off_diagonal_norm(a) <= threshold);
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r <= threshold * 1e-2) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const cplx phase = a(p, q) / r;  // e^{i phi}
                const double w = (aqq - app) / (2.0 * r);
                const double t = (w >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(w) + std::sqrt(w * w + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx sp = s * phase;             // s e^{i phi}
                const cplx sm = s * std::conj(phase);  // s e^{-i phi}
                // Column update: A <- A J, V <- V J.
                for (int i = 0; i < n; ++i) {
                    const cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = c * aip - sm * aiq;
                    a(i, q) = sp * aip + c * aiq;
                    const cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = c * vip - sm * viq;
                    v(i, q) = sp * vip + c * viq;
                }
                // Row update: A <- J^dag A.
                for (int j = 0; j < n; ++j) {
                    const cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * apj - sp * aqj;
                    a(q, j) = sm * apj + c * aqj;
                }
            }
        }
        converged = (off_diagonal_norm(a) <= threshold);
    }
    if (!converged) {
        throw non_convergent_error("Jacobi iteration did not converge in 100 sweeps");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigenSystem es;
    es.eigenvalues.reserve(n);
    es.eigenvectors.reserve(n);
    for (int k = 0; k < n; ++k) {
        const int col = order[k];
        es.eigenvalues.push_back(a(col, col).real());
        CVector vec(n);
        for (int i = 0; i < n; ++i) vec[i] = v(i, col);
        vec.normalize();
        // Deterministic phase: first component with modulus > 1e-9 made
        // real and positive.
        for (int i = 0; i < n; ++i) {
            const double m = std::abs(vec[i]);
            if (m > 1e-9) {
                vec *= std::conj(vec[i]) / m;
                break;
            }
        }
        es.eigenvectors.push_back(vec);
    }
    return es;
}

CMatrix partial_transpose_b(const CMatrix& rho) {
    if (rho.dim() != 4) {
        throw invalid_argument_error("partial transpose requires a 4x4 matrix");
    }
    CMatrix out(4);
    for (int i1 = 0; i1 < 2; ++i1)
        for (int i2 = 0; i2 < 2; ++i2)
            for (int j1 = 0; j1 < 2; ++j1)
                for (int j2 = 0; j2 < 2; ++j2)
                    out(2 * i1 + j2, 2 * j1 + i2) = rho(2 * i1 + i2, 2 * j1 + j2);
    return out;
}

double trace_norm(const CMatrix& a) {
    const EigenSystem es = hermitian_eig(a);
    double s = 0.0;
    for (double lam : es.eigenvalues) s += std::abs(lam);
    return s;
}

CMatrix matrix_exp_unitary(const CMatrix& h, double t) {
    const EigenSystem es = hermitian_eig(h);
    const int n = h.dim();
    CMatrix out(n);
    for (int k = 0; k < n; ++k) {
        const cplx ph = std::exp(cplx(0.0, -es.eigenvalues[k] * t));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += ph * es.eigenvectors[k][i] * std::conj(es.eigenvectors[k][j]);
    }
    return out;
}

}  // namespace fracdimer
