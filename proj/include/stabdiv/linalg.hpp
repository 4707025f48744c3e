// Dense complex linear algebra for the operator experiments: matrix product
// kernels (OpenMP with a serial reference kept for testing and benchmarks),
// a cyclic Jacobi Hermitian eigensolver, and a one-sided Jacobi SVD.
//
// Both kernels compute each output entry with the same serial inner loop, so
// the parallel and serial paths produce bitwise identical results.
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace stabdiv::la {

using cd = std::complex<double>;

class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cd& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const cd& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const std::vector<cd>& data() const { return a_; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cd> a_;
};

Matrix matmul(const Matrix& A, const Matrix& B);         // OpenMP over rows
Matrix matmul_serial(const Matrix& A, const Matrix& B);  // reference kernel
Matrix adjoint(const Matrix& A);
Matrix operator+(const Matrix& A, const Matrix& B);
Matrix operator-(const Matrix& A, const Matrix& B);
Matrix scale(const cd& c, const Matrix& A);

std::vector<cd> apply(const Matrix& A, const std::vector<cd>& x);

double frobenius_norm(const Matrix& A);
double max_abs(const Matrix& A);

struct HermitianEig {
    std::vector<double> eigenvalues;  // ascending
    Matrix eigenvectors;              // columns
};

// Cyclic Jacobi for Hermitian matrices. Throws if A is not square.
HermitianEig eig_hermitian(const Matrix& A);

// Singular values (descending) via one-sided Jacobi column orthogonalization.
std::vector<double> singular_values(const Matrix& A);

// Largest singular value.
double operator_norm(const Matrix& A);

// (sum sigma^p)^(1/p) from the SVD route.
double schatten_norm(const Matrix& A, double p);
// Independent route: eigenvalues of A^H A, then (sum lambda^(p/2))^(1/p).
double schatten_norm_via_gram(const Matrix& A, double p);

}  // namespace stabdiv::la
