#include "stabdiv/polynomial.hpp"

#include <algorithm>

namespace stabdiv {

bool term_divides(const Term& a, const Term& b) {
    if (a.coeff.is_zero() || b.coeff.is_zero())
        throw std::invalid_argument("term divisibility needs nonzero coefficients");
    return divides(a.mono, b.mono);
}

Term term_quotient(const Term& b, const Term& a) {
    if (!term_divides(a, b)) throw std::invalid_argument("term quotient not defined");
    return Term{b.coeff / a.coeff, quotient(b.mono, a.mono)};
}

Polynomial Polynomial::constant(std::size_t dim, const GaussianRational& c) {
    Polynomial p(dim);
    p.add_term(Monomial(dim), c);
    return p;
}

Polynomial Polynomial::from_term(const Term& t) {
    Polynomial p(t.mono.dim());
    p.add_term(t.mono, t.coeff);
    return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t i) {
    if (i >= dim) throw std::invalid_argument("variable index out of range");
    Monomial m(dim);
    m[i] = 1;
    return from_term({GaussianRational(1), m});
}

void Polynomial::add_term(const Monomial& mono, const GaussianRational& c) {
    if (mono.dim() != dim_) throw std::invalid_argument("monomial dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussianRational Polynomial::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? GaussianRational() : it->second;
}

void Polynomial::check_dims(const Polynomial& p, const Polynomial& q) {
    if (p.dim_ != q.dim_) throw std::invalid_argument("polynomial dimension mismatch");
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    Polynomial::check_dims(p, q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, c);
    return r;
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    Polynomial::check_dims(p, q);
    Polynomial r = p;
    for (const auto& [m, c] : q.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator-(const Polynomial& p) {
    Polynomial r(p.dim());
    for (const auto& [m, c] : p.terms_) r.add_term(m, -c);
    return r;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    Polynomial::check_dims(p, q);
    Polynomial r(p.dim());
    for (const auto& [mp, cp] : p.terms_)
        for (const auto& [mq, cq] : q.terms_) r.add_term(mp * mq, cp * cq);
    return r;
}

Polynomial operator*(const GaussianRational& c, const Polynomial& p) {
    Polynomial r(p.dim());
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.add_term(m, c * pc);
    return r;
}

Polynomial operator*(const Term& t, const Polynomial& p) {
    Polynomial r(p.dim());
    if (t.coeff.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.add_term(t.mono * m, t.coeff * pc);
    return r;
}

std::uint64_t weighted_degree(const Polynomial& p, const WeightedOrder& ord) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no weighted degree");
    std::uint64_t best = 0;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t d = ord.weighted_degree(m);
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

std::map<std::uint64_t, Polynomial> quasi_components(const Polynomial& p, const WeightedOrder& ord) {
    std::map<std::uint64_t, Polynomial> parts;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t d = ord.weighted_degree(m);
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, Polynomial(p.dim())).first;
        it->second.add_term(m, c);
    }
    return parts;
}

std::optional<std::uint64_t> quasi_homogeneous_degree(const Polynomial& p, const WeightedOrder& ord) {
    if (p.is_zero()) return std::nullopt;
    std::optional<std::uint64_t> deg;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t d = ord.weighted_degree(m);
        if (!deg)
            deg = d;
        else if (*deg != d)
            return std::nullopt;
    }
    return deg;
}

Term leading_term(const Polynomial& p, const WeightedOrder& ord) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading term");
    const Monomial* best = nullptr;
    const GaussianRational* bc = nullptr;
    for (const auto& [m, c] : p.terms()) {
        if (!best || monomial_less(*best, m, ord)) {
            best = &m;
            bc = &c;
        }
    }
    return Term{*bc, *best};
}

Monomial leading_monomial(const Polynomial& p, const WeightedOrder& ord) {
    return leading_term(p, ord).mono;
}

std::map<std::uint64_t, Polynomial> homogeneous_components(const Polynomial& p) {
    WeightedOrder total(std::vector<std::uint32_t>(p.dim(), 1));
    return quasi_components(p, total);
}

std::uint64_t max_total_degree(const Polynomial& p) {
    std::uint64_t best = 0;
    for (const auto& [m, c] : p.terms()) best = std::max(best, m.total_degree());
    return best;
}

VectorPolynomial::VectorPolynomial(std::vector<Polynomial> comps) : comps_(std::move(comps)) {
    if (comps_.empty()) throw std::invalid_argument("vector polynomial needs at least one component");
    for (const auto& c : comps_)
        if (c.dim() != comps_[0].dim())
            throw std::invalid_argument("vector polynomial components must share dim");
}

VectorPolynomial VectorPolynomial::zero(std::size_t dim, std::size_t r) {
    return VectorPolynomial(std::vector<Polynomial>(r, Polynomial(dim)));
}

bool VectorPolynomial::is_zero() const {
    return std::all_of(comps_.begin(), comps_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

VectorPolynomial operator+(const VectorPolynomial& a, const VectorPolynomial& b) {
    if (a.r() != b.r()) throw std::invalid_argument("vector polynomial length mismatch");
    std::vector<Polynomial> c;
    c.reserve(a.r());
    for (std::size_t i = 0; i < a.r(); ++i) c.push_back(a.component(i) + b.component(i));
    return VectorPolynomial(std::move(c));
}

VectorPolynomial operator-(const VectorPolynomial& a, const VectorPolynomial& b) {
    if (a.r() != b.r()) throw std::invalid_argument("vector polynomial length mismatch");
    std::vector<Polynomial> c;
    c.reserve(a.r());
    for (std::size_t i = 0; i < a.r(); ++i) c.push_back(a.component(i) - b.component(i));
    return VectorPolynomial(std::move(c));
}

VectorPolynomial operator*(const Polynomial& p, const VectorPolynomial& v) {
    std::vector<Polynomial> c;
    c.reserve(v.r());
    for (std::size_t i = 0; i < v.r(); ++i) c.push_back(p * v.component(i));
    return VectorPolynomial(std::move(c));
}

VectorTerm leading_term(const VectorPolynomial& v, const WeightedOrder& ord) {
    if (v.is_zero()) throw std::invalid_argument("zero vector polynomial has no leading term");
    std::optional<VectorTerm> best;
    for (std::size_t i = 0; i < v.r(); ++i) {
        if (v.component(i).is_zero()) continue;
        Term t = leading_term(v.component(i), ord);
        if (!best || monomial_less(best->mono, t.mono, ord))
            best = VectorTerm{t.coeff, t.mono, i};
        // equal monomials keep the lower component index
    }
    return *best;
}

std::optional<std::uint64_t> quasi_homogeneous_degree(const VectorPolynomial& v,
                                                      const WeightedOrder& ord) {
    std::optional<std::uint64_t> deg;
    for (std::size_t i = 0; i < v.r(); ++i) {
        if (v.component(i).is_zero()) continue;
        auto d = quasi_homogeneous_degree(v.component(i), ord);
        if (!d) return std::nullopt;
        if (!deg)
            deg = d;
        else if (*deg != *d)
            return std::nullopt;
    }
    return deg;
}

}  // namespace stabdiv
