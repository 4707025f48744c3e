// Stable-division certification: sweep the degree slices of a
// quasi-homogeneous ideal, measure the division algorithm's norm expansion
// on each slice exactly, and report whether the per-degree maxima plateau.
// Also: the vector-valued ratio table and the finite-truncation row-operator
// gap.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stabdiv/division.hpp"
#include "stabdiv/norms.hpp"
#include "stabdiv/polynomial.hpp"

namespace stabdiv {

// Linearly independent spanning set of span{z^a f_i : weighted degree == q},
// chosen among the monomial multiples themselves by exact rank reduction.
std::vector<Polynomial> slice_basis(const std::vector<Polynomial>& gens, const WeightedOrder& ord,
                                    std::uint64_t q);

enum class Verdict { bounded_plateau, growing, inconclusive };

const char* to_string(Verdict v);

struct DegreeRecord {
    std::uint64_t degree;
    std::size_t slice_dim;
    Rational max_ratio_sq;
    Rational mean_ratio_sq;
    std::size_t nonzero_remainders;
    std::optional<Rational> max_minimal_ratio_sq;  // present when the oracle runs
};

struct StabilityReport {
    std::uint64_t q_min;
    std::uint64_t q_max;
    std::size_t samples_per_slice;
    std::uint64_t seed;
    std::vector<DegreeRecord> records;
    Rational sup_ratio_sq;
    double linear_constant_A;  // sqrt(k * sup): the one float in the report
    Verdict verdict;
};

struct CertifyOptions {
    std::size_t samples = 50;
    std::uint64_t seed = 0;
    bool parallel = true;        // slices are independent; results merge by degree
    bool minimal_oracle = false; // also record the best-representation ratio per slice
};

// Generators must be quasi-homogeneous of one common weighted degree m; the
// sweep covers q in [m, q_max]. Per slice, ratios are taken over every
// slice-basis element plus `samples` random integer combinations with
// coefficients in [-9, 9], streams derived from (seed, degree). Verdict:
// bounded-plateau when the top-third max is <= 1.05x the middle-third max;
// growing when it is >= 2x the bottom-third max; else inconclusive.
StabilityReport certify(const std::vector<Polynomial>& gens, const WeightedOrder& ord,
                        const SpaceParams& sp, std::uint64_t q_max, const CertifyOptions& options);

struct VectorRatioRow {
    std::uint32_t n;
    Rational ratio_sq;
    Rational remainder_norm_sq;
};

// Division ratios for the window family h_n = (x y^n, -x y^n, 0) against a
// supplied generating set of C[x,y]^3. d = 2 only.
std::vector<VectorRatioRow> certify_vector(const std::vector<VectorPolynomial>& gens,
                                           const WeightedOrder& ord, const SpaceParams& sp,
                                           std::uint32_t n_max);

VectorPolynomial counterexample_h(std::uint32_t n);

struct RowOperatorGap {
    std::uint32_t D;
    double sigma_min;          // least singular value off the kernel
    double implied_constant;   // 1 / sigma_min^2
    std::size_t domain_dim;    // sum of the block ranks
    std::size_t codomain_dim;
    std::size_t kernel_dim;
};

// Least nonzero singular value of (m_1,...,m_k) -> sum m_i on the truncated
// blocks span{z^a f_i : total degree <= D}, each block orthonormalized in
// the space inner product. Floating point evidence, not proof.
RowOperatorGap row_operator_gap(const std::vector<Polynomial>& gens, const WeightedOrder& ord,
                                const SpaceParams& sp, std::uint32_t D);

// Exact minimal-norm representation ratio on a slice: the smallest possible
// sum ||a_i f_i||^2 over all representations h = sum a_i f_i with
// quasi-homogeneous slice quotients, divided by ||h||^2. Lower-bounds what
// any division strategy could achieve. Throws when h is not in the slice span.
Rational minimal_representation_ratio(const Polynomial& h, const std::vector<Polynomial>& gens,
                                      const WeightedOrder& ord, const SpaceParams& sp);

struct LinearityCounterexample {
    Polynomial h1;
    Polynomial h2;
};

// Randomized probe for additivity of the division map on a degree slice.
// Counterexamples are returned for the caller to log, never suppressed.
std::vector<LinearityCounterexample> division_linearity_probe(const std::vector<Polynomial>& gens,
                                                              const WeightedOrder& ord,
                                                              std::uint64_t q, std::size_t trials,
                                                              std::uint64_t seed);

}  // namespace stabdiv
