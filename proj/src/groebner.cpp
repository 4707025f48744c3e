#include "stabdiv/groebner.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace stabdiv {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const WeightedOrder& ord) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s-polynomial of zero input");
    Term lf = leading_term(f, ord);
    Term lg = leading_term(g, ord);
    Monomial l = lcm(lf.mono, lg.mono);
    Term tf{GaussianRational(1) / lf.coeff, quotient(l, lf.mono)};
    Term tg{GaussianRational(1) / lg.coeff, quotient(l, lg.mono)};
    return tf * f - tg * g;
}

namespace {

// Adds g to the basis after reducing it against the current one; keeps all
// leading monomials distinct so the division indexing stays well-defined.
bool add_reduced(std::vector<Polynomial>& basis, const Polynomial& g, const WeightedOrder& ord) {
    if (g.is_zero()) return false;
    Polynomial nf = basis.empty() ? g : divide(g, basis, ord).remainder;
    if (nf.is_zero()) return false;
    basis.push_back(nf);
    return true;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const WeightedOrder& ord,
                         bool reduce) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    for (const auto& g : gens)
        if (g.is_zero()) throw std::invalid_argument("zero generator");

    std::vector<Polynomial> basis;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    };
    for (const auto& g : gens)
        if (add_reduced(basis, g, ord)) push_pairs(basis.size() - 1);

    while (!pairs.empty()) {
        // normal strategy: smallest lcm of the pair's leading monomials
        std::size_t best = 0;
        Monomial best_lcm =
            lcm(leading_monomial(basis[pairs[0].first], ord), leading_monomial(basis[pairs[0].second], ord));
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            Monomial l = lcm(leading_monomial(basis[pairs[k].first], ord),
                             leading_monomial(basis[pairs[k].second], ord));
            if (monomial_less(l, best_lcm, ord)) {
                best = k;
                best_lcm = l;
            }
        }
        auto [i, j] = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        Monomial mi = leading_monomial(basis[i], ord);
        Monomial mj = leading_monomial(basis[j], ord);
        if (lcm(mi, mj) == mi * mj) continue;  // coprime criterion

        Polynomial s = s_polynomial(basis[i], basis[j], ord);
        if (add_reduced(basis, s, ord)) push_pairs(basis.size() - 1);
    }

    if (!reduce) return GroebnerBasis{std::move(basis), ord, false};

    // minimal basis: drop generators whose leading monomial another divides
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Monomial mi = leading_monomial(basis[i], ord);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial mj = leading_monomial(basis[j], ord);
            if (divides(mj, mi) && (!(mi == mj) || j < i)) redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Polynomial> minimal;
    for (auto i : keep) minimal.push_back(basis[i]);

    // full reduction + monic normalization
    std::vector<Polynomial> reduced_basis;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial nf = others.empty() ? minimal[i] : divide(minimal[i], others, ord).remainder;
        Term lt = leading_term(nf, ord);
        reduced_basis.push_back((GaussianRational(1) / lt.coeff) * nf);
    }
    std::sort(reduced_basis.begin(), reduced_basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_less(leading_monomial(b, ord), leading_monomial(a, ord), ord);
    });
    return GroebnerBasis{std::move(reduced_basis), ord, true};
}

bool is_member(const Polynomial& h, const GroebnerBasis& gb) {
    if (h.is_zero()) return true;
    return divide(h, gb.generators, gb.order).remainder.is_zero();
}

GroebnerBasis quasi_homogeneous_basis(const std::vector<Polynomial>& gens,
                                      const WeightedOrder& ord, bool reduce) {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!quasi_homogeneous_degree(gens[i], ord))
            throw std::invalid_argument("generator " + std::to_string(i + 1) +
                                        " is not quasi-homogeneous");
    GroebnerBasis gb = buchberger(gens, ord, reduce);
    for (const auto& g : gb.generators) {
        if (!quasi_homogeneous_degree(g, ord))
            throw std::logic_error(
                "quasi-homogeneity was not preserved by the basis computation; this "
                "contradicts the weight-compatibility of the order");
    }
    return gb;
}

std::vector<Monomial> monomials_of_weighted_degree(const WeightedOrder& ord, std::uint64_t s) {
    std::vector<Monomial> out;
    Monomial cur(ord.dim());
    // lexicographic backtracking over exponent vectors
    auto rec = [&](auto&& self, std::size_t var, std::uint64_t rem) -> void {
        if (var + 1 == ord.dim()) {
            if (rem % ord.weights[var] == 0) {
                cur[var] = static_cast<std::uint32_t>(rem / ord.weights[var]);
                out.push_back(cur);
                cur[var] = 0;
            }
            return;
        }
        for (std::uint64_t e = 0; e * ord.weights[var] <= rem; ++e) {
            cur[var] = static_cast<std::uint32_t>(e);
            self(self, var + 1, rem - e * ord.weights[var]);
        }
        cur[var] = 0;
    };
    rec(rec, 0, s);
    return out;
}

std::vector<Polynomial> equalize_degrees(const GroebnerBasis& gb, std::uint64_t m) {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < gb.generators.size(); ++i) {
        const Polynomial& g = gb.generators[i];
        auto deg = quasi_homogeneous_degree(g, gb.order);
        if (!deg)
            throw std::invalid_argument("generator " + std::to_string(i + 1) +
                                        " is not quasi-homogeneous");
        if (*deg > m)
            throw std::invalid_argument("target degree " + std::to_string(m) +
                                        " is below generator " + std::to_string(i + 1));
        auto betas = monomials_of_weighted_degree(gb.order, m - *deg);
        if (betas.empty())
            throw std::invalid_argument("degree " + std::to_string(m) +
                                        " is unattainable from generator " + std::to_string(i + 1) +
                                        " (weighted degree " + std::to_string(*deg) + ")");
        for (const auto& beta : betas) {
            Polynomial prod = Term{GaussianRational(1), beta} * g;
            if (std::find(out.begin(), out.end(), prod) == out.end()) out.push_back(prod);
        }
    }
    return out;
}

std::uint64_t default_equalize_degree(const GroebnerBasis& gb) {
    std::uint64_t max_deg = 0;
    for (const auto& g : gb.generators) {
        auto deg = quasi_homogeneous_degree(g, gb.order);
        if (!deg) throw std::invalid_argument("generators must be quasi-homogeneous");
        max_deg = std::max(max_deg, *deg);
    }
    const auto& w = gb.order.weights;
    std::uint64_t bound;
    if (w.size() == 2 && std::gcd(w[0], w[1]) == 1) {
        // all degrees >= n1*n2 - n1 - n2 + 1 are sums of the two weights
        std::int64_t f = std::int64_t(w[0]) * w[1] - w[0] - w[1] + 1;
        bound = f > 0 ? static_cast<std::uint64_t>(f) : 0;
    } else {
        bound = std::accumulate(w.begin(), w.end(), std::uint64_t{1},
                                [](std::uint64_t a, std::uint32_t b) { return std::lcm(a, std::uint64_t(b)); });
    }
    std::uint64_t m = max_deg + bound;
    for (std::uint64_t cap = m + 1000; m <= cap; ++m) {
        bool ok = true;
        for (const auto& g : gb.generators) {
            auto deg = quasi_homogeneous_degree(g, gb.order);
            if (monomials_of_weighted_degree(gb.order, m - *deg).empty()) {
                ok = false;
                break;
            }
        }
        if (ok) return m;
    }
    throw std::invalid_argument("no common attainable degree found for the generator set");
}

Codimension staircase_codimension(const GroebnerBasis& gb) {
    const std::size_t d = gb.order.dim();
    std::vector<Monomial> lms;
    for (const auto& g : gb.generators) lms.push_back(leading_monomial(g, gb.order));

    // finite iff a pure power of every variable leads some generator
    std::vector<std::uint64_t> bound(d, 0);
    for (std::size_t v = 0; v < d; ++v) {
        bool found = false;
        for (const auto& m : lms) {
            bool pure = true;
            for (std::size_t u = 0; u < d; ++u)
                if (u != v && m[u] != 0) pure = false;
            if (pure && (!found || m[v] < bound[v])) {
                bound[v] = m[v];
                found = true;
            }
        }
        if (!found) return Codimension{false, 0};
    }

    // count monomials in the box below the pure-power bounds that avoid
    // every leading monomial
    std::uint64_t count = 0;
    Monomial cur(d);
    auto rec = [&](auto&& self, std::size_t v) -> void {
        if (v == d) {
            for (const auto& m : lms)
                if (divides(m, cur)) return;
            ++count;
            return;
        }
        for (std::uint64_t e = 0; e < bound[v]; ++e) {
            cur[v] = static_cast<std::uint32_t>(e);
            self(self, v + 1);
        }
        cur[v] = 0;
    };
    rec(rec, 0);
    return Codimension{true, count};
}

// ---------------------------------------------------------------------------
// Bivariate gcd via a primitive polynomial remainder sequence over Q(i)[x].

namespace {

using XPoly = std::vector<GaussianRational>;  // univariate in x
using YPoly = std::vector<XPoly>;             // coefficients of powers of y

void trim(XPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool x_zero(const XPoly& p) { return p.empty(); }

XPoly x_mul(const XPoly& a, const XPoly& b) {
    if (x_zero(a) || x_zero(b)) return {};
    XPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

XPoly x_sub(const XPoly& a, const XPoly& b) {
    XPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// division in Q(i)[x]; returns {quotient, remainder}
std::pair<XPoly, XPoly> x_divmod(const XPoly& a, const XPoly& b) {
    if (x_zero(b)) throw std::invalid_argument("univariate division by zero");
    XPoly rem = a, quot;
    if (a.size() >= b.size()) quot.assign(a.size() - b.size() + 1, GaussianRational());
    while (rem.size() >= b.size()) {
        GaussianRational c = rem.back() / b.back();
        std::size_t shift = rem.size() - b.size();
        quot[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        trim(rem);
        if (rem.size() < b.size()) break;
    }
    trim(quot);
    return {quot, rem};
}

XPoly x_gcd(XPoly a, XPoly b) {
    trim(a);
    trim(b);
    while (!x_zero(b)) {
        XPoly r = x_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!x_zero(a)) {
        GaussianRational lead = a.back();
        for (auto& c : a) c = c / lead;  // monic
    }
    return a;
}

void trim(YPoly& p) {
    while (!p.empty() && x_zero(p.back())) p.pop_back();
}

bool y_zero(const YPoly& p) { return p.empty(); }

XPoly y_content(const YPoly& p) {
    XPoly c;
    for (const auto& coef : p) {
        if (x_zero(coef)) continue;
        c = x_zero(c) ? coef : x_gcd(c, coef);
        if (c.size() == 1) break;  // unit content
    }
    if (!x_zero(c)) {
        GaussianRational lead = c.back();
        for (auto& q : c) q = q / lead;
    }
    return c;
}

YPoly y_primitive(const YPoly& p) {
    if (y_zero(p)) return {};
    XPoly c = y_content(p);
    YPoly r;
    r.reserve(p.size());
    for (const auto& coef : p) {
        if (x_zero(coef)) {
            r.push_back({});
            continue;
        }
        auto [q, rem] = x_divmod(coef, c);
        if (!x_zero(rem)) throw std::logic_error("content division left a remainder");
        r.push_back(q);
    }
    trim(r);
    return r;
}

// pseudo-remainder of a by b in y (any nonzero R-multiple works since the
// caller takes primitive parts)
YPoly y_prem(YPoly a, const YPoly& b) {
    trim(a);
    const XPoly& lb = b.back();
    while (!y_zero(a) && a.size() >= b.size()) {
        XPoly la = a.back();
        std::size_t shift = a.size() - b.size();
        // a <- lb * a - la * y^shift * b
        YPoly next(std::max(a.size(), b.size() + shift));
        for (std::size_t i = 0; i < a.size(); ++i) next[i] = x_mul(lb, a[i]);
        for (std::size_t i = 0; i < b.size(); ++i)
            next[i + shift] = x_sub(next[i + shift], x_mul(la, b[i]));
        trim(next);
        a = std::move(next);
    }
    return a;
}

YPoly to_ypoly(const Polynomial& p) {
    YPoly out;
    for (const auto& [m, c] : p.terms()) {
        std::size_t ye = m[1], xe = m[0];
        if (out.size() <= ye) out.resize(ye + 1);
        if (out[ye].size() <= xe) out[ye].resize(xe + 1);
        out[ye][xe] = c;
    }
    for (auto& coef : out) trim(coef);
    trim(out);
    return out;
}

Polynomial from_ypoly(const YPoly& p) {
    Polynomial out(2);
    for (std::size_t ye = 0; ye < p.size(); ++ye)
        for (std::size_t xe = 0; xe < p[ye].size(); ++xe)
            out.add_term(Monomial{static_cast<std::uint32_t>(xe), static_cast<std::uint32_t>(ye)},
                         p[ye][xe]);
    return out;
}

YPoly y_gcd(YPoly f, YPoly g) {
    trim(f);
    trim(g);
    if (y_zero(f)) return g;
    if (y_zero(g)) return f;
    XPoly content = x_gcd(y_content(f), y_content(g));
    YPoly a = y_primitive(f), b = y_primitive(g);
    if (a.size() < b.size()) std::swap(a, b);
    while (!y_zero(b)) {
        YPoly r = y_prem(a, b);
        a = std::move(b);
        b = y_primitive(r);
    }
    a = y_primitive(a);
    // restore the content
    YPoly out;
    out.reserve(a.size());
    for (const auto& coef : a) out.push_back(x_mul(coef, content));
    trim(out);
    return out;
}

}  // namespace

Polynomial ideal_gcd(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("zero generator");
        if (g.dim() != 2) throw std::invalid_argument("gcd is implemented for two variables only");
    }
    YPoly acc = to_ypoly(gens[0]);
    for (std::size_t i = 1; i < gens.size(); ++i) {
        acc = y_gcd(acc, to_ypoly(gens[i]));
        if (acc.size() == 1 && acc[0].size() == 1) break;  // constant
    }
    Polynomial p = from_ypoly(acc);
    WeightedOrder grlex = WeightedOrder::graded_lex(2);
    Term lt = leading_term(p, grlex);
    return (GaussianRational(1) / lt.coeff) * p;
}

BeurlingForm beurling_form(const std::vector<Polynomial>& gens) {
    Polynomial p = ideal_gcd(gens);
    WeightedOrder grlex = WeightedOrder::graded_lex(2);
    std::vector<Polynomial> cofactors;
    for (const auto& g : gens) {
        DivisionResult dr = divide(g, {p}, grlex);
        if (!dr.remainder.is_zero())
            throw std::logic_error("gcd does not divide a generator exactly");
        cofactors.push_back(dr.quotients[0]);
    }
    GroebnerBasis gb = buchberger(cofactors, grlex, true);
    return BeurlingForm{std::move(p), std::move(cofactors), staircase_codimension(gb)};
}

}  // namespace stabdiv
