// Random polynomial generators shared by probes and tests.
#pragma once

#include "stabdiv/polynomial.hpp"
#include "stabdiv/rng.hpp"

namespace stabdiv {

struct RandomPolyOptions {
    std::uint32_t max_total_degree = 4;
    std::int64_t coeff_bound = 9;    // coefficients uniform in [-bound, bound]
    double term_probability = 0.5;   // chance each monomial below the bound appears
    bool gaussian_parts = false;     // also draw imaginary parts
    bool ensure_nonzero = true;
};

Polynomial random_polynomial(std::size_t dim, const RandomPolyOptions& opts, Rng& rng);

// Nonzero quasi-homogeneous polynomial of the given weighted degree; returns
// a zero polynomial when no monomial of that degree exists.
Polynomial random_quasi_homogeneous(const WeightedOrder& ord, std::uint64_t degree,
                                    std::int64_t coeff_bound, Rng& rng);

}  // namespace stabdiv
