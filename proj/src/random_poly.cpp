#include "stabdiv/random_poly.hpp"

#include "stabdiv/groebner.hpp"

namespace stabdiv {

Polynomial random_polynomial(std::size_t dim, const RandomPolyOptions& opts, Rng& rng) {
    Polynomial p(dim);
    // walk all monomials of total degree <= bound
    Monomial cur(dim);
    auto rec = [&](auto&& self, std::size_t v, std::uint32_t budget) -> void {
        if (v == dim) {
            if (rng.unit_real() >= opts.term_probability) return;
            Rational re(rng.int_in(-opts.coeff_bound, opts.coeff_bound));
            Rational im =
                opts.gaussian_parts ? Rational(rng.int_in(-opts.coeff_bound, opts.coeff_bound)) : Rational(0);
            p.add_term(cur, GaussianRational(re, im));
            return;
        }
        for (std::uint32_t e = 0; e <= budget; ++e) {
            cur[v] = e;
            self(self, v + 1, budget - e);
        }
        cur[v] = 0;
    };
    rec(rec, 0, opts.max_total_degree);
    if (opts.ensure_nonzero && p.is_zero()) {
        Monomial m(dim);
        m[0] = rng.int_in(0, opts.max_total_degree) > 0 ? 1 : 0;
        p.add_term(m, GaussianRational(Rational(1 + rng.int_in(0, opts.coeff_bound - 1))));
    }
    return p;
}

Polynomial random_quasi_homogeneous(const WeightedOrder& ord, std::uint64_t degree,
                                    std::int64_t coeff_bound, Rng& rng) {
    auto monos = monomials_of_weighted_degree(ord, degree);
    Polynomial p(ord.dim());
    if (monos.empty()) return p;
    for (const auto& m : monos)
        p.add_term(m, GaussianRational(Rational(rng.int_in(-coeff_bound, coeff_bound))));
    if (p.is_zero()) p.add_term(monos[rng.next_u64() % monos.size()], GaussianRational(1));
    return p;
}

}  // namespace stabdiv
