// Monomials in d variables and the weighted monomial order.
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace stabdiv {

// Exponent vector of fixed length d.
struct Monomial {
    std::vector<std::uint32_t> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t d) : exponents(d, 0) {}
    Monomial(std::initializer_list<std::uint32_t> e) : exponents(e) {}

    std::size_t dim() const { return exponents.size(); }
    std::uint32_t operator[](std::size_t i) const { return exponents[i]; }
    std::uint32_t& operator[](std::size_t i) { return exponents[i]; }

    bool is_one() const {
        for (auto e : exponents)
            if (e) return false;
        return true;
    }

    std::uint64_t total_degree() const {
        return std::accumulate(exponents.begin(), exponents.end(), std::uint64_t{0});
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exponents == b.exponents; }
};

// Structural comparison used as the canonical map key; independent of any
// weighted order so one polynomial can be read under many orders.
struct MonomialKeyLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents < b.exponents; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("monomial dimension mismatch");
    Monomial r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool divides(const Monomial& a, const Monomial& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("monomial dimension mismatch");
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// b / a, defined only when divides(a, b).
inline Monomial quotient(const Monomial& b, const Monomial& a) {
    if (!divides(a, b)) throw std::invalid_argument("monomial quotient not defined");
    Monomial r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = b[i] - a[i];
    return r;
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("monomial dimension mismatch");
    Monomial r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// Weight vector plus a variable precedence for tie-breaking. The induced
// order compares weighted degree first; equal degrees are broken
// lexicographically along the precedence (a larger exponent on an earlier
// variable wins). With weights (1,...,1) this is graded lex.
struct WeightedOrder {
    std::vector<std::uint32_t> weights;
    std::vector<std::uint32_t> precedence;  // variable indices, highest first

    explicit WeightedOrder(std::vector<std::uint32_t> w)
        : weights(std::move(w)), precedence(weights.size()) {
        for (std::uint32_t i = 0; i < precedence.size(); ++i) precedence[i] = i;
        validate();
    }
    WeightedOrder(std::vector<std::uint32_t> w, std::vector<std::uint32_t> prec)
        : weights(std::move(w)), precedence(std::move(prec)) {
        validate();
    }
    static WeightedOrder graded_lex(std::size_t d) {
        return WeightedOrder(std::vector<std::uint32_t>(d, 1));
    }

    std::size_t dim() const { return weights.size(); }

    std::uint64_t weighted_degree(const Monomial& m) const {
        if (m.dim() != dim()) throw std::invalid_argument("monomial dimension mismatch");
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < dim(); ++i) s += std::uint64_t(m[i]) * weights[i];
        return s;
    }

    std::uint32_t max_weight() const {
        std::uint32_t w = 0;
        for (auto x : weights) w = std::max(w, x);
        return w;
    }

  private:
    void validate() const {
        if (weights.empty()) throw std::invalid_argument("empty weight vector");
        for (auto w : weights)
            if (w == 0) throw std::invalid_argument("weights must be positive");
        if (precedence.size() != weights.size())
            throw std::invalid_argument("precedence length must equal variable count");
    }
};

enum class Cmp { less = -1, equal = 0, greater = 1 };

inline Cmp compare_monomials(const Monomial& a, const Monomial& b, const WeightedOrder& ord) {
    if (a.dim() != b.dim()) throw std::invalid_argument("monomial dimension mismatch");
    std::uint64_t da = ord.weighted_degree(a), db = ord.weighted_degree(b);
    if (da != db) return da < db ? Cmp::less : Cmp::greater;
    for (auto v : ord.precedence) {
        if (a[v] != b[v]) return a[v] < b[v] ? Cmp::less : Cmp::greater;
    }
    return Cmp::equal;
}

inline bool monomial_less(const Monomial& a, const Monomial& b, const WeightedOrder& ord) {
    return compare_monomials(a, b, ord) == Cmp::less;
}

}  // namespace stabdiv
