// Sparse multivariate polynomials over the Gaussian rationals, plus their
// vector-valued counterparts. Values are immutable in spirit: every operation
// returns a fresh polynomial and nothing here mutates shared state.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stabdiv/monomial.hpp"
#include "stabdiv/rational.hpp"

namespace stabdiv {

struct Term {
    GaussianRational coeff;
    Monomial mono;
};

// a divides b iff exponents are componentwise <= (coefficients nonzero).
bool term_divides(const Term& a, const Term& b);
// b / a; throws if a does not divide b.
Term term_quotient(const Term& b, const Term& a);

class Polynomial {
  public:
    using TermMap = std::map<Monomial, GaussianRational, MonomialKeyLess>;

    explicit Polynomial(std::size_t dim = 0) : dim_(dim) {}

    static Polynomial zero(std::size_t dim) { return Polynomial(dim); }
    static Polynomial constant(std::size_t dim, const GaussianRational& c);
    static Polynomial from_term(const Term& t);
    // Single variable z_i (0-based).
    static Polynomial variable(std::size_t dim, std::size_t i);

    std::size_t dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Adds c * mono, pruning the entry if the sum cancels.
    void add_term(const Monomial& mono, const GaussianRational& c);

    GaussianRational coefficient(const Monomial& mono) const;

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator-(const Polynomial& p);
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(const GaussianRational& c, const Polynomial& p);
    friend Polynomial operator*(const Term& t, const Polynomial& p);
    friend bool operator==(const Polynomial& p, const Polynomial& q) {
        return p.dim_ == q.dim_ && p.terms_ == q.terms_;
    }

  private:
    std::size_t dim_;
    TermMap terms_;

    static void check_dims(const Polynomial& p, const Polynomial& q);
};

// Max over stored monomials of exponents . weights. Throws on the zero
// polynomial: it has no weighted degree and callers must branch.
std::uint64_t weighted_degree(const Polynomial& p, const WeightedOrder& ord);

// Splits p into its quasi-homogeneous summands, keyed by weighted degree.
// The parts have pairwise disjoint supports and sum back to p.
std::map<std::uint64_t, Polynomial> quasi_components(const Polynomial& p, const WeightedOrder& ord);

// Degree value when p is quasi-homogeneous under ord, nullopt otherwise.
std::optional<std::uint64_t> quasi_homogeneous_degree(const Polynomial& p, const WeightedOrder& ord);

// Greatest term under the order. Throws on the zero polynomial.
Term leading_term(const Polynomial& p, const WeightedOrder& ord);
Monomial leading_monomial(const Polynomial& p, const WeightedOrder& ord);

// Components by total degree (weights all one); used by the norm-equivalence
// bounds. Keys are total degrees.
std::map<std::uint64_t, Polynomial> homogeneous_components(const Polynomial& p);

std::uint64_t max_total_degree(const Polynomial& p);

// Element of C[z]^r with equal dim across components.
class VectorPolynomial {
  public:
    VectorPolynomial() = default;
    explicit VectorPolynomial(std::vector<Polynomial> comps);

    static VectorPolynomial zero(std::size_t dim, std::size_t r);

    std::size_t r() const { return comps_.size(); }
    std::size_t dim() const { return comps_.empty() ? 0 : comps_[0].dim(); }
    bool is_zero() const;
    const Polynomial& component(std::size_t i) const { return comps_.at(i); }
    const std::vector<Polynomial>& components() const { return comps_; }

    friend VectorPolynomial operator+(const VectorPolynomial& a, const VectorPolynomial& b);
    friend VectorPolynomial operator-(const VectorPolynomial& a, const VectorPolynomial& b);
    // Module action of a scalar polynomial.
    friend VectorPolynomial operator*(const Polynomial& p, const VectorPolynomial& v);
    friend bool operator==(const VectorPolynomial& a, const VectorPolynomial& b) {
        return a.comps_ == b.comps_;
    }

  private:
    std::vector<Polynomial> comps_;
};

struct VectorTerm {
    GaussianRational coeff;
    Monomial mono;
    std::size_t component;
};

// Greatest term across all components: compare monomials under the order,
// ties go to the lowest component index.
VectorTerm leading_term(const VectorPolynomial& v, const WeightedOrder& ord);

std::optional<std::uint64_t> quasi_homogeneous_degree(const VectorPolynomial& v,
                                                      const WeightedOrder& ord);

}  // namespace stabdiv
