// Buchberger's algorithm under a weighted order, ideal membership, staircase
// codimension, degree-equalized quasi-homogeneous bases, and the gcd
// factorization of a bivariate ideal into a principal part times a finite
// codimensional cofactor ideal.
#pragma once

#include <cstdint>
#include <vector>

#include "stabdiv/division.hpp"
#include "stabdiv/polynomial.hpp"

namespace stabdiv {

struct GroebnerBasis {
    std::vector<Polynomial> generators;
    WeightedOrder order;
    bool reduced;
};

// (lcm/LT(f)) f - (lcm/LT(g)) g for the leading-monomial lcm.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const WeightedOrder& ord);

// Normal selection strategy (smallest lcm first) with the coprime-criterion
// pruning. With reduce set, the output is the reduced basis: monic
// generators, no term divisible by another generator's leading term.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const WeightedOrder& ord,
                         bool reduce = true);

// True iff dividing h by the basis leaves remainder zero.
bool is_member(const Polynomial& h, const GroebnerBasis& gb);

// Buchberger restricted to quasi-homogeneous inputs; validates that every
// output generator is again quasi-homogeneous and fails loudly otherwise.
GroebnerBasis quasi_homogeneous_basis(const std::vector<Polynomial>& gens,
                                      const WeightedOrder& ord, bool reduce = true);

// All monomial multiples z^b g_i of weighted degree exactly m, deduplicated.
// Throws (naming the offending generator) when m is not reachable from some
// generator degree by adding weights.
std::vector<Polynomial> equalize_degrees(const GroebnerBasis& gb, std::uint64_t m);

// Smallest target degree >= the max generator degree from which every
// generator can be equalized; the CLI default for equalize_degrees.
std::uint64_t default_equalize_degree(const GroebnerBasis& gb);

struct Codimension {
    bool finite;
    std::uint64_t value;  // meaningful when finite

    friend bool operator==(const Codimension& a, const Codimension& b) {
        return a.finite == b.finite && (!a.finite || a.value == b.value);
    }
};

// Number of monomials under the staircase of the basis' leading-term ideal;
// finite iff that ideal contains a pure power of every variable.
Codimension staircase_codimension(const GroebnerBasis& gb);

// gcd of the generators of a bivariate ideal, computed by a primitive
// polynomial remainder sequence over Q(i)[x]; the result is monic under
// graded lex. Throws for d != 2.
Polynomial ideal_gcd(const std::vector<Polynomial>& gens);

struct BeurlingForm {
    Polynomial gcd_part;
    std::vector<Polynomial> cofactors;  // gens[i] = gcd_part * cofactors[i]
    Codimension codimension;            // staircase codimension of <cofactors>
};

BeurlingForm beurling_form(const std::vector<Polynomial>& gens);

// All monomials b with b . weights == s.
std::vector<Monomial> monomials_of_weighted_degree(const WeightedOrder& ord, std::uint64_t s);

}  // namespace stabdiv
