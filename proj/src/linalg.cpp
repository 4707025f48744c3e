#include "stabdiv/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace stabdiv::la {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

namespace {

inline cd row_dot(const Matrix& A, const Matrix& B, std::size_t i, std::size_t j) {
    cd s = 0.0;
    for (std::size_t k = 0; k < A.cols(); ++k) s += A(i, k) * B(k, j);
    return s;
}

}  // namespace

Matrix matmul_serial(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matmul shape mismatch");
    Matrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) C(i, j) = row_dot(A, B, i, j);
    return C;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matmul shape mismatch");
    Matrix C(A.rows(), B.cols());
    const std::int64_t n = static_cast<std::int64_t>(A.rows());
#pragma omp parallel for schedule(static) if (n * static_cast<std::int64_t>(B.cols()) * \
                                                  static_cast<std::int64_t>(A.cols()) > 32768)
    for (std::int64_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < B.cols(); ++j)
            C(static_cast<std::size_t>(i), j) = row_dot(A, B, static_cast<std::size_t>(i), j);
    return C;
}

Matrix adjoint(const Matrix& A) {
    Matrix T(A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) T(j, i) = std::conj(A(i, j));
    return T;
}

Matrix operator+(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j) + B(i, j);
    return C;
}

Matrix operator-(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols())
        throw std::invalid_argument("matrix difference shape mismatch");
    Matrix C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j) - B(i, j);
    return C;
}

Matrix scale(const cd& c, const Matrix& A) {
    Matrix C(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = c * A(i, j);
    return C;
}

std::vector<cd> apply(const Matrix& A, const std::vector<cd>& x) {
    if (A.cols() != x.size()) throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<cd> y(A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        cd s = 0.0;
        for (std::size_t k = 0; k < A.cols(); ++k) s += A(i, k) * x[k];
        y[i] = s;
    }
    return y;
}

double frobenius_norm(const Matrix& A) {
    double s = 0.0;
    for (const cd& v : A.data()) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs(const Matrix& A) {
    double m = 0.0;
    for (const cd& v : A.data()) m = std::max(m, std::abs(v));
    return m;
}

HermitianEig eig_hermitian(const Matrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("eigensolver needs a square matrix");
    const std::size_t n = A.rows();
    Matrix M = A;
    Matrix V = Matrix::identity(n);

    auto off_norm = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(M(i, j));
        return std::sqrt(2.0 * s);
    };

    const double scale_ref = std::max(frobenius_norm(M), 1e-300);
    const double tol = 1e-14 * scale_ref;
    for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                cd apq = M(p, q);
                double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                double app = M(p, p).real();
                double aqq = M(q, q).real();
                if (mag <= 1e-18 * (std::abs(app) + std::abs(aqq))) continue;

                // phase: u makes the pivot real, then a real rotation
                cd u = apq / mag;
                double theta = 0.5 * std::atan2(2.0 * mag, app - aqq);
                double c = std::cos(theta);
                cd s = std::sin(theta) * u;

                // columns: M <- M J with J = [[c, -conj(s)], [s, c]] on (p,q)
                for (std::size_t i = 0; i < n; ++i) {
                    cd mip = M(i, p), miq = M(i, q);
                    M(i, p) = c * mip + std::conj(s) * miq;
                    M(i, q) = -s * mip + c * miq;
                }
                // rows: M <- J^H M
                for (std::size_t i = 0; i < n; ++i) {
                    cd mpi = M(p, i), mqi = M(q, i);
                    M(p, i) = c * mpi + s * mqi;
                    M(q, i) = -std::conj(s) * mpi + c * mqi;
                }
                // accumulate eigenvectors
                for (std::size_t i = 0; i < n; ++i) {
                    cd vip = V(i, p), viq = V(i, q);
                    V(i, p) = c * vip + std::conj(s) * viq;
                    V(i, q) = -s * vip + c * viq;
                }
            }
        }
    }

    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t a, std::size_t b) { return M(a, a).real() < M(b, b).real(); });

    HermitianEig out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = M(idx[k], idx[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = V(i, idx[k]);
    }
    return out;
}

std::vector<double> singular_values(const Matrix& A) {
    // One-sided Jacobi: orthogonalize columns of a working copy; singular
    // values are the final column norms. Works on A or A^H, whichever has
    // fewer columns.
    Matrix W = A.cols() <= A.rows() ? A : adjoint(A);
    const std::size_t n = W.cols(), m = W.rows();

    auto col_dot = [&](std::size_t p, std::size_t q) {
        cd s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::conj(W(i, p)) * W(i, q);
        return s;
    };

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double a = col_dot(p, p).real();
                double b = col_dot(q, q).real();
                if (a == 0.0 || b == 0.0) continue;
                cd g = col_dot(p, q);
                double mag = std::abs(g);
                if (mag <= 1e-15 * std::sqrt(a * b)) continue;
                rotated = true;
                // fold the phase into column q so the cross term is real,
                // then apply the real Jacobi rotation
                cd u = std::conj(g / mag);
                double tau = (b - a) / (2.0 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                for (std::size_t i = 0; i < m; ++i) {
                    cd wp = W(i, p), wq_f = u * W(i, q);
                    W(i, p) = c * wp - s * wq_f;
                    W(i, q) = s * wp + c * wq_f;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sv(n);
    for (std::size_t j = 0; j < n; ++j) sv[j] = std::sqrt(std::max(0.0, col_dot(j, j).real()));
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

double operator_norm(const Matrix& A) {
    auto sv = singular_values(A);
    return sv.empty() ? 0.0 : sv[0];
}

double schatten_norm(const Matrix& A, double p) {
    if (p < 1.0) throw std::invalid_argument("Schatten norm needs p >= 1");
    auto sv = singular_values(A);
    double s = 0.0;
    for (double v : sv) s += std::pow(v, p);
    return std::pow(s, 1.0 / p);
}

double schatten_norm_via_gram(const Matrix& A, double p) {
    if (p < 1.0) throw std::invalid_argument("Schatten norm needs p >= 1");
    Matrix G = matmul(adjoint(A), A);
    auto eig = eig_hermitian(G);
    double s = 0.0;
    for (double lambda : eig.eigenvalues) s += std::pow(std::max(0.0, lambda), p / 2.0);
    return std::pow(s, 1.0 / p);
}

}  // namespace stabdiv::la
