// Multivariate division with remainder under a weighted order.
//
// Divisor selection: generators are sorted by strictly decreasing leading
// term before indexing, and each step uses the largest sorted index whose
// leading term divides the current leading term. Quotients are reported in
// the caller's original order. Every step is traced.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stabdiv/norms.hpp"
#include "stabdiv/polynomial.hpp"

namespace stabdiv {

struct TraceStep {
    enum class Kind { divide, to_remainder };
    Kind kind;
    GaussianRational coeff;  // leading term moved at this step
    Monomial mono;
    std::size_t component = 0;  // always 0 for scalar division
    std::size_t generator = 0;  // caller's index; meaningful for divide steps
};

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
    std::vector<TraceStep> trace;
};

struct VectorDivisionResult {
    std::vector<Polynomial> quotients;
    VectorPolynomial remainder;
    std::vector<TraceStep> trace;
};

// h = sum a_i f_i + r exactly; no remainder term is divisible by any
// generator leading term. Throws on an empty generator list, a zero
// generator, or two generators with equal leading monomials.
DivisionResult divide(const Polynomial& h, const std::vector<Polynomial>& gens,
                      const WeightedOrder& ord);

// Same contract over C[z]^r. The leading term of a vector polynomial is the
// greatest monomial across components (ties to the lowest component index);
// a generator divides only within the component of its leading term.
VectorDivisionResult divide_vector(const VectorPolynomial& h,
                                   const std::vector<VectorPolynomial>& gens,
                                   const WeightedOrder& ord);

struct StabilityRatio {
    Rational ratio_sq;            // sum ||a_i f_i||^2 / ||h||^2
    Rational remainder_adjusted;  // sum ||a_i f_i||^2 / (||h||^2 + ||r||^2)
    Rational remainder_norm_sq;
};

// Runs the division algorithm and measures its norm expansion in the (d, t)
// space. Exact.
StabilityRatio stability_ratio(const Polynomial& h, const std::vector<Polynomial>& gens,
                               const WeightedOrder& ord, const SpaceParams& sp);
StabilityRatio stability_ratio(const VectorPolynomial& h,
                               const std::vector<VectorPolynomial>& gens, const WeightedOrder& ord,
                               const SpaceParams& sp);

struct StepConstant {
    std::size_t generator_index;
    std::uint64_t m;  // weighted degree of the generator
    Rational value;
};

// Per-generator division-step constant (2m)!/|a_{j1}|^2 * sum_j |a_j|^2 for a
// quasi-homogeneous bivariate generator, where a_j are its coefficients by
// ascending power of the second variable and a_{j1} is the leading one.
StepConstant step_constant(const Polynomial& f, const WeightedOrder& ord);

std::string trace_to_text(const std::vector<TraceStep>& trace, std::size_t dim);
std::string trace_to_json(const std::vector<TraceStep>& trace, std::size_t dim);

}  // namespace stabdiv
