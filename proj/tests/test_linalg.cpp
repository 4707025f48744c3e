#include <doctest.h>

#include <cmath>
#include <vector>
#include <algorithm>

#include "stabdiv/linalg.hpp"
#include "stabdiv/rng.hpp"

using namespace stabdiv;
using la::cd;
using la::Matrix;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, Rng& rng) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = cd(rng.sym_real(), rng.sym_real());
    return m;
}

Matrix random_hermitian(std::size_t n, Rng& rng) {
    Matrix a = random_matrix(n, n, rng);
    Matrix h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

}  // namespace

TEST_CASE("parallel and serial matmul agree bitwise") {
    Rng rng(3);
    for (auto [r, k, c] : std::vector<std::tuple<int, int, int>>{{17, 23, 9}, {64, 64, 64}, {130, 41, 77}}) {
        Matrix A = random_matrix(r, k, rng);
        Matrix B = random_matrix(k, c, rng);
        CHECK(la::matmul(A, B) == la::matmul_serial(A, B));
    }
}

TEST_CASE("hermitian eigendecomposition reconstructs the matrix") {
    Rng rng(5);
    for (std::size_t n : {3u, 12u, 40u}) {
        Matrix A = random_hermitian(n, rng);
        la::HermitianEig eig = la::eig_hermitian(A);
        REQUIRE(eig.eigenvalues.size() == n);
        for (std::size_t k = 1; k < n; ++k) CHECK(eig.eigenvalues[k - 1] <= eig.eigenvalues[k]);
        // A V = V diag(lambda)
        Matrix L(n, n);
        for (std::size_t k = 0; k < n; ++k) L(k, k) = eig.eigenvalues[k];
        Matrix lhs = la::matmul(A, eig.eigenvectors);
        Matrix rhs = la::matmul(eig.eigenvectors, L);
        CHECK(la::max_abs(lhs - rhs) < 1e-10);
        // V unitary
        Matrix I = la::matmul(la::adjoint(eig.eigenvectors), eig.eigenvectors);
        CHECK(la::max_abs(I - Matrix::identity(n)) < 1e-10);
    }
}

TEST_CASE("eigenvalues of a known matrix") {
    // [[2, i], [-i, 2]] has eigenvalues 1 and 3
    Matrix A(2, 2);
    A(0, 0) = 2.0;
    A(0, 1) = cd(0, 1);
    A(1, 0) = cd(0, -1);
    A(1, 1) = 2.0;
    auto eig = la::eig_hermitian(A);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("singular values against the gram route") {
    Rng rng(7);
    for (auto [r, c] : std::vector<std::pair<int, int>>{{20, 12}, {12, 20}, {30, 30}}) {
        Matrix A = random_matrix(r, c, rng);
        auto sv = la::singular_values(A);
        auto eig = la::eig_hermitian(la::matmul(la::adjoint(A), A));
        std::vector<double> ref;
        for (double l : eig.eigenvalues) ref.push_back(std::sqrt(std::max(0.0, l)));
        std::sort(ref.begin(), ref.end(), std::greater<double>());
        // the gram route pads with zeros up to the column count
        REQUIRE(sv.size() == std::min(A.rows(), A.cols()));
        for (std::size_t i = 0; i < sv.size(); ++i)
            CHECK(sv[i] == doctest::Approx(ref[i]).epsilon(1e-9));
        // sqrt of a machine-zero eigenvalue lands near sqrt(eps)
        for (std::size_t i = sv.size(); i < ref.size(); ++i) CHECK(ref[i] < 1e-7 * ref[0]);
    }
}

TEST_CASE("schatten norms: closed forms and the dual route") {
    Matrix zero(5, 8);
    CHECK(la::schatten_norm(zero, 3.0) == 0.0);

    Matrix diag(2, 2);
    diag(0, 0) = 3.0;
    diag(1, 1) = 4.0;
    CHECK(la::schatten_norm(diag, 2.0) == doctest::Approx(5.0).epsilon(1e-12));

    Rng rng(9);
    for (double p : {1.0, 2.0, 3.5, 6.0}) {
        Matrix A = random_matrix(25, 18, rng);
        double s1 = la::schatten_norm(A, p);
        double s2 = la::schatten_norm_via_gram(A, p);
        CHECK(std::abs(s1 - s2) / s1 < 1e-8);
    }

    CHECK_THROWS_AS(la::schatten_norm(diag, 0.5), std::invalid_argument);
}

TEST_CASE("operator norm bounds and rank deficiency") {
    Rng rng(11);
    Matrix A = random_matrix(15, 15, rng);
    double norm = la::operator_norm(A);
    // consistency with the Frobenius bound
    CHECK(norm <= la::frobenius_norm(A) + 1e-12);
    CHECK(norm >= la::frobenius_norm(A) / std::sqrt(15.0) - 1e-12);

    // duplicate a column: at least one zero singular value
    Matrix B = A;
    for (std::size_t i = 0; i < 15; ++i) B(i, 3) = B(i, 7);
    auto sv = la::singular_values(B);
    CHECK(sv.back() < 1e-12 * sv.front());
}
