#include "stabdiv/norms.hpp"

namespace stabdiv {

namespace {

// prod_{i=a+1..b} (d + t + i) as an exact rational, b >= a.
Rational shifted_product(const SpaceParams& sp, std::uint64_t a, std::uint64_t b) {
    Integer num = 1;
    Integer den = 1;
    const Integer& tp = sp.t.get_num();
    const Integer& tq = sp.t.get_den();
    for (std::uint64_t i = a + 1; i <= b; ++i) {
        // d + t + i = (tq*(d+i) + tp) / tq
        num *= tq * Integer(static_cast<unsigned long>(sp.d + i)) + tp;
        den *= tq;
    }
    return make_rational(num, den);
}

}  // namespace

Rational monomial_norm_sq(const Monomial& alpha, const SpaceParams& sp) {
    if (alpha.dim() != sp.d) throw std::invalid_argument("monomial dimension mismatch");
    Integer alpha_fact = 1;
    for (std::size_t i = 0; i < alpha.dim(); ++i) alpha_fact *= factorial(alpha[i]);
    Rational denom = shifted_product(sp, 0, alpha.total_degree());
    return Rational(alpha_fact) / denom;
}

Rational poly_norm_sq(const Polynomial& p, const SpaceParams& sp) {
    if (!p.is_zero() && p.dim() != sp.d) throw std::invalid_argument("polynomial dimension mismatch");
    Rational s = 0;
    for (const auto& [m, c] : p.terms()) s += c.norm_sq() * monomial_norm_sq(m, sp);
    return s;
}

Rational vector_poly_norm_sq(const VectorPolynomial& v, const SpaceParams& sp) {
    Rational s = 0;
    for (const auto& comp : v.components()) s += poly_norm_sq(comp, sp);
    return s;
}

GaussianRational inner_product(const Polynomial& p, const Polynomial& q, const SpaceParams& sp) {
    if (p.dim() != q.dim()) throw std::invalid_argument("polynomial dimension mismatch");
    GaussianRational s;
    for (const auto& [m, cp] : p.terms()) {
        GaussianRational cq = q.coefficient(m);
        if (cq.is_zero()) continue;
        s += cp * cq.conj() * GaussianRational(monomial_norm_sq(m, sp));
    }
    return s;
}

Rational c_ratio(std::uint64_t n, const SpaceParams& sp) {
    return Rational(factorial(n)) / shifted_product(sp, 0, n);
}

Rational c_ratio_limit_probe(std::uint32_t n_weight, const SpaceParams& sp, std::uint64_t m) {
    if (n_weight == 0) throw std::invalid_argument("weight must be positive");
    std::uint64_t k = m / n_weight;
    // c_k / c_m telescopes to prod_{i=k+1..m} (d+t+i)/i
    Rational num = shifted_product(sp, k, m);
    Integer den = 1;
    for (std::uint64_t i = k + 1; i <= m; ++i) den *= Integer(static_cast<unsigned long>(i));
    return num / Rational(den);
}

EquivalenceVerdict equivalence_bounds_check(const Polynomial& f, const SpaceParams& sp) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    auto parts = homogeneous_components(f);
    std::uint64_t k = parts.begin()->first;
    std::uint64_t m = parts.rbegin()->first;
    Rational norm_t = poly_norm_sq(f, sp);
    Rational norm_base = poly_norm_sq(f, SpaceParams::row_contractive(sp.d));
    Rational lower = c_ratio(m, sp) * norm_base;
    Rational upper = c_ratio(k, sp) * norm_base;
    return EquivalenceVerdict{lower <= norm_t, norm_t <= upper, k, m};
}

}  // namespace stabdiv
