// Exact inner products and norms for the weighted function space scale
// indexed by (d, t): monomials are orthogonal with
//
//     ||z^a||^2 = a! / prod_{i=1..|a|} (d + t + i),
//
// t = -d is the row-contractive endpoint, t = -1 the boundary-integral
// space, t = 0 the volume-integral space. Everything here is an exact
// rational; nothing is floated.
#pragma once

#include <cstdint>

#include "stabdiv/polynomial.hpp"
#include "stabdiv/rational.hpp"

namespace stabdiv {

struct SpaceParams {
    std::size_t d;
    Rational t;

    SpaceParams(std::size_t d_, Rational t_) : d(d_), t(std::move(t_)) {
        if (d == 0) throw std::invalid_argument("variable count must be positive");
        if (t < -Rational(static_cast<long>(d))) throw std::invalid_argument("t must satisfy t >= -d");
    }

    static SpaceParams row_contractive(std::size_t d) {
        return SpaceParams(d, Rational(-static_cast<long>(d)));
    }
};

Rational monomial_norm_sq(const Monomial& alpha, const SpaceParams& sp);

Rational poly_norm_sq(const Polynomial& p, const SpaceParams& sp);
Rational vector_poly_norm_sq(const VectorPolynomial& v, const SpaceParams& sp);

// sum_a c_a(p) * conj(c_a(q)) * ||z^a||^2
GaussianRational inner_product(const Polynomial& p, const Polynomial& q, const SpaceParams& sp);

// c_{n,t} = n! / prod_{i=1..n} (d+t+i): the homogeneous-degree-n norm ratio
// against the t = -d endpoint. Lies in (0,1], non-increasing in n, and
// strictly decreasing to 0 when t > -d.
Rational c_ratio(std::uint64_t n, const SpaceParams& sp);

// c_{floor(m/n_weight), t} / c_{m, t}, exact. As m grows this approaches
// n_weight^(d+t).
Rational c_ratio_limit_probe(std::uint32_t n_weight, const SpaceParams& sp, std::uint64_t m);

struct EquivalenceVerdict {
    bool lower_ok;
    bool upper_ok;
    std::uint64_t min_degree;
    std::uint64_t max_degree;
};

// Checks c_{m,t} ||f||^2_{-d} <= ||f||^2_t <= c_{k,t} ||f||^2_{-d} where k, m
// are the min/max total degrees of the homogeneous parts of f. Exact.
EquivalenceVerdict equivalence_bounds_check(const Polynomial& f, const SpaceParams& sp);

}  // namespace stabdiv
