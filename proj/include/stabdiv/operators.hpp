// Finite truncations of the coordinate multiplication tuple on the weighted
// spaces, ideal projections, Schatten-norm scans, and the subspace-angle
// bound check. Exact rationals are converted to doubles at matrix-build
// time; the computations downstream are floating point.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stabdiv/linalg.hpp"
#include "stabdiv/norms.hpp"
#include "stabdiv/rng.hpp"

namespace stabdiv {

// Raised when a floating-point diagnostic (Gram conditioning, ambiguous
// numerical rank) prevents a trustworthy answer.
struct NumericalDiagnosticError : std::runtime_error {
    double condition;
    explicit NumericalDiagnosticError(const std::string& what, double cond)
        : std::runtime_error(what), condition(cond) {}
};

// Orthonormal coordinates for the span of all monomials of total degree <= D.
struct TruncationBasis {
    SpaceParams sp;
    std::uint32_t max_degree;
    std::vector<Monomial> monomials;   // ascending degree, lex within a degree
    std::vector<Rational> norm_sq;     // exact squared norms
    std::vector<double> norm;          // converted at build time
    std::map<Monomial, std::size_t, MonomialKeyLess> index;

    static TruncationBasis build(const SpaceParams& sp, std::uint32_t D);

    std::size_t size() const { return monomials.size(); }

    // Coordinates of p in the normalized monomial basis, so the Euclidean
    // norm of the result equals ||p|| in the space. Throws if p sticks out
    // of the truncation.
    std::vector<la::cd> coordinates(const Polynomial& p) const;
};

struct OperatorMatrix {
    la::Matrix mat;
    TruncationBasis domain;
    TruncationBasis codomain;
};

// Multiplication by z_i as a map from the degree-<=D to the degree-<=(D+1)
// truncation; a weighted shift with one nonzero entry per column.
OperatorMatrix mult_op(std::size_t i, const SpaceParams& sp, std::uint32_t D);

// Square compression P_D S_i P_D on the given truncation.
la::Matrix mult_op_compressed(std::size_t i, const TruncationBasis& basis);

// Orthogonal projection onto span{z^a f_i : total degree <= D} inside the
// truncation, built by Gram-matrix orthonormalization with relative rank
// tolerance 1e-10. Throws NumericalDiagnosticError when the rank decision is
// ambiguous.
OperatorMatrix ideal_projection(const std::vector<Polynomial>& gens, const SpaceParams& sp,
                                std::uint32_t D);

// Orthonormal columns spanning the same space (the Q of the projection).
la::Matrix ideal_subspace_frame(const std::vector<Polynomial>& gens, const TruncationBasis& basis);

// [S_i, S_j^*] compressed to the degree-<=D truncation. Rows and columns of
// degree D are boundary-affected; interior_block extracts the exact part.
OperatorMatrix cross_commutator(std::size_t i, std::size_t j, const SpaceParams& sp,
                                std::uint32_t D);

// Restriction of a square matrix on the truncation to the monomials of
// total degree <= maxdeg.
la::Matrix interior_block(const la::Matrix& A, const TruncationBasis& basis, std::uint32_t maxdeg);

struct ScanValue {
    std::uint32_t D;
    std::size_t j;          // variable index, 0-based
    double value;           // Schatten-2p norm of the interior compression
    double full_value;      // same including the boundary-affected rows/columns
    double increment;       // against the previous D for the same j; 0 for the first
};

struct ScanResult {
    double p;
    bool p_in_recommended_range;  // p > d
    std::vector<ScanValue> values;
};

// For each truncation size D: Schatten-2p norm of (I - P) S_j^* P where P
// projects onto the truncated ideal. The series and its increments are
// descriptive truncation evidence, nothing more.
ScanResult essential_normality_scan(const std::vector<Polynomial>& gens, const SpaceParams& sp,
                                    double p, const std::vector<std::uint32_t>& D_list);

struct FangXiaSample {
    std::string g;
    double lhs;    // max over directions of ||Q S_j^* (g f)|| in the t norm
    double rhs;    // ||g f|| in the (t+1) norm
    double ratio;
};

struct FangXiaReport {
    std::vector<FangXiaSample> samples;
    double max_ratio;
};

FangXiaReport fang_xia_probe(const Polynomial& f, const SpaceParams& sp, std::uint32_t D,
                             std::size_t samples, std::uint64_t seed);

struct AngleCheckReport {
    double c;                  // cosine of the angle between N and M
    double C;                  // max of the restricted operator norms
    double bound_factor;       // C sqrt(2) (1-c)^{-1/2}
    std::size_t samples;
    std::size_t violations;               // of the operator bound beyond slack
    std::size_t intermediate_violations;  // of ||m+n||^2 >= (1-c)(||m||^2+||n||^2)
    double worst_ratio;                   // max of ||T(m+n)|| / (factor ||m+n||)
};

// M spanned by the columns of m_basis, N by the single vector v. Verifies
// ||T(m+n)|| <= C sqrt(2) (1-c)^{-1/2} ||m+n|| on random pairs with relative
// slack 1e-9. Throws when c >= 1 - 1e-8.
AngleCheckReport angle_bound_check(const la::Matrix& m_basis, const std::vector<la::cd>& v,
                                   const la::Matrix& T, std::size_t samples, std::uint64_t seed);

struct AngleInstance {
    la::Matrix m_basis;      // orthonormal columns
    std::vector<la::cd> v;   // unit vector at prescribed angle to M
    la::Matrix T;
};

AngleInstance make_angle_instance(std::size_t ambient_dim, std::size_t m_dim, double cos_angle,
                                  std::uint64_t seed);

}  // namespace stabdiv
