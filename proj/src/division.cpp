#include "stabdiv/division.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "stabdiv/parse.hpp"

#include <json.hpp>

namespace stabdiv {

namespace {

// Strict comparison of vector leading terms: monomial under the order,
// ties to the lower component index (lower index is greater).
bool vector_term_greater(const VectorTerm& a, const VectorTerm& b, const WeightedOrder& ord) {
    Cmp c = compare_monomials(a.mono, b.mono, ord);
    if (c != Cmp::equal) return c == Cmp::greater;
    return a.component < b.component;
}

}  // namespace

VectorDivisionResult divide_vector(const VectorPolynomial& h,
                                   const std::vector<VectorPolynomial>& gens,
                                   const WeightedOrder& ord) {
    if (gens.empty()) throw std::invalid_argument("division needs at least one generator");
    const std::size_t r = gens[0].r();
    const std::size_t dim = gens[0].dim();
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("zero generator");
        if (g.r() != r || g.dim() != dim)
            throw std::invalid_argument("generators must share dim and length");
    }
    if (!h.is_zero() && (h.r() != r || h.dim() != dim))
        throw std::invalid_argument("dividend and generators must share dim and length");

    // Indexing for the "maximal index" rule follows strictly decreasing
    // leading terms; equal leading terms make that rule ambiguous.
    std::vector<std::size_t> order_idx(gens.size());
    std::iota(order_idx.begin(), order_idx.end(), 0);
    std::vector<VectorTerm> lts;
    lts.reserve(gens.size());
    for (const auto& g : gens) lts.push_back(leading_term(g, ord));
    std::stable_sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
        return vector_term_greater(lts[a], lts[b], ord);
    });
    for (std::size_t i = 0; i + 1 < order_idx.size(); ++i) {
        const VectorTerm& a = lts[order_idx[i]];
        const VectorTerm& b = lts[order_idx[i + 1]];
        if (a.mono == b.mono && a.component == b.component)
            throw std::invalid_argument("two generators share a leading monomial; reduce the set first");
    }

    VectorDivisionResult res;
    res.quotients.assign(gens.size(), Polynomial(dim));
    res.remainder = VectorPolynomial::zero(dim, r);
    if (h.is_zero()) return res;

    std::vector<Polynomial> rem(r, Polynomial(dim));
    VectorPolynomial p = h;
    bool have_prev = false;
    VectorTerm prev{};
    while (!p.is_zero()) {
        VectorTerm lt = leading_term(p, ord);
        if (have_prev && !vector_term_greater(prev, lt, ord))
            throw std::logic_error("division step did not decrease the leading term");
        prev = lt;
        have_prev = true;
        // maximal sorted index whose leading term divides
        std::size_t chosen = gens.size();
        for (std::size_t s = order_idx.size(); s-- > 0;) {
            const VectorTerm& g = lts[order_idx[s]];
            if (g.component == lt.component && divides(g.mono, lt.mono)) {
                chosen = order_idx[s];
                break;
            }
        }
        if (chosen < gens.size()) {
            Term q{lt.coeff / lts[chosen].coeff, quotient(lt.mono, lts[chosen].mono)};
            res.quotients[chosen].add_term(q.mono, q.coeff);
            p = p - Polynomial::from_term(q) * gens[chosen];
            res.trace.push_back({TraceStep::Kind::divide, lt.coeff, lt.mono, lt.component, chosen});
        } else {
            rem[lt.component].add_term(lt.mono, lt.coeff);
            std::vector<Polynomial> drop(r, Polynomial(dim));
            drop[lt.component].add_term(lt.mono, lt.coeff);
            p = p - VectorPolynomial(std::move(drop));
            res.trace.push_back({TraceStep::Kind::to_remainder, lt.coeff, lt.mono, lt.component, 0});
        }
    }
    res.remainder = VectorPolynomial(std::move(rem));
    return res;
}

DivisionResult divide(const Polynomial& h, const std::vector<Polynomial>& gens,
                      const WeightedOrder& ord) {
    std::vector<VectorPolynomial> vgens;
    vgens.reserve(gens.size());
    for (const auto& g : gens) vgens.push_back(VectorPolynomial({g}));
    VectorDivisionResult vr = divide_vector(
        h.is_zero() ? VectorPolynomial({Polynomial(gens.empty() ? 0 : gens[0].dim())})
                    : VectorPolynomial({h}),
        vgens, ord);
    return DivisionResult{std::move(vr.quotients), vr.remainder.component(0), std::move(vr.trace)};
}

StabilityRatio stability_ratio(const Polynomial& h, const std::vector<Polynomial>& gens,
                               const WeightedOrder& ord, const SpaceParams& sp) {
    if (h.is_zero()) throw std::invalid_argument("stability ratio of the zero polynomial");
    DivisionResult dr = divide(h, gens, ord);
    Rational num = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        num += poly_norm_sq(dr.quotients[i] * gens[i], sp);
    Rational h_sq = poly_norm_sq(h, sp);
    Rational r_sq = poly_norm_sq(dr.remainder, sp);
    return StabilityRatio{num / h_sq, num / (h_sq + r_sq), r_sq};
}

StabilityRatio stability_ratio(const VectorPolynomial& h,
                               const std::vector<VectorPolynomial>& gens, const WeightedOrder& ord,
                               const SpaceParams& sp) {
    if (h.is_zero()) throw std::invalid_argument("stability ratio of the zero vector polynomial");
    VectorDivisionResult dr = divide_vector(h, gens, ord);
    Rational num = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
        num += vector_poly_norm_sq(dr.quotients[i] * gens[i], sp);
    Rational h_sq = vector_poly_norm_sq(h, sp);
    Rational r_sq = vector_poly_norm_sq(dr.remainder, sp);
    return StabilityRatio{num / h_sq, num / (h_sq + r_sq), r_sq};
}

StepConstant step_constant(const Polynomial& f, const WeightedOrder& ord) {
    if (ord.dim() != 2 || f.dim() != 2)
        throw std::invalid_argument("step constant is defined for two variables only");
    auto deg = quasi_homogeneous_degree(f, ord);
    if (!deg) throw std::invalid_argument("step constant needs a quasi-homogeneous generator");

    // Coefficients by ascending power of the second variable; the leading
    // term carries the smallest such power.
    std::vector<std::pair<std::uint32_t, Rational>> by_y;
    for (const auto& [m, c] : f.terms()) by_y.emplace_back(m[1], c.norm_sq());
    std::sort(by_y.begin(), by_y.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational lead_sq = by_y.front().second;
    Rational sum_sq = 0;
    for (const auto& [j, sq] : by_y) sum_sq += sq;

    std::uint64_t m = *deg;
    return StepConstant{0, m, Rational(factorial(2 * m)) / lead_sq * sum_sq};
}

namespace {

std::string mono_text(const Monomial& m, std::size_t dim) {
    Polynomial p(dim);
    p.add_term(m, GaussianRational(1));
    return format(p);
}

}  // namespace

std::string trace_to_text(const std::vector<TraceStep>& trace, std::size_t dim) {
    std::ostringstream out;
    for (const auto& step : trace) {
        std::string term = to_string(step.coeff) + "*" + mono_text(step.mono, dim);
        if (step.kind == TraceStep::Kind::divide)
            out << "divide " << term << " [component " << step.component << "] by generator "
                << step.generator + 1 << "\n";
        else
            out << "to-remainder " << term << " [component " << step.component << "]\n";
    }
    return out.str();
}

std::string trace_to_json(const std::vector<TraceStep>& trace, std::size_t dim) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& step : trace) {
        nlohmann::json j;
        j["kind"] = step.kind == TraceStep::Kind::divide ? "divide" : "to_remainder";
        j["coeff"] = to_string(step.coeff);
        j["monomial"] = mono_text(step.mono, dim);
        j["component"] = step.component;
        if (step.kind == TraceStep::Kind::divide) j["generator"] = step.generator + 1;
        arr.push_back(std::move(j));
    }
    return arr.dump();
}

}  // namespace stabdiv
