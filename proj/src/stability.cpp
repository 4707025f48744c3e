#include "stabdiv/stability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stabdiv/groebner.hpp"
#include "stabdiv/operators.hpp"
#include "stabdiv/random_poly.hpp"
#include "stabdiv/rng.hpp"

namespace stabdiv {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::bounded_plateau: return "bounded-plateau";
        case Verdict::growing: return "growing";
        default: return "inconclusive";
    }
}

std::vector<Polynomial> slice_basis(const std::vector<Polynomial>& gens, const WeightedOrder& ord,
                                    std::uint64_t q) {
    std::vector<Polynomial> chosen;
    // echelon rows keyed by their leading monomial
    std::vector<Polynomial> pivots;
    auto reduce = [&](Polynomial p) {
        while (!p.is_zero()) {
            Term lt = leading_term(p, ord);
            const Polynomial* hit = nullptr;
            for (const auto& row : pivots) {
                if (leading_monomial(row, ord) == lt.mono) {
                    hit = &row;
                    break;
                }
            }
            if (!hit) break;
            p = p - (lt.coeff / leading_term(*hit, ord).coeff) * *hit;
        }
        return p;
    };
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto deg = quasi_homogeneous_degree(gens[i], ord);
        if (!deg)
            throw std::invalid_argument("generator " + std::to_string(i + 1) +
                                        " is not quasi-homogeneous");
        if (*deg > q) continue;
        for (const auto& beta : monomials_of_weighted_degree(ord, q - *deg)) {
            Polynomial candidate = Term{GaussianRational(1), beta} * gens[i];
            Polynomial reduced = reduce(candidate);
            if (reduced.is_zero()) continue;
            pivots.push_back(std::move(reduced));
            chosen.push_back(std::move(candidate));
        }
    }
    return chosen;
}

namespace {

DegreeRecord evaluate_slice(const std::vector<Polynomial>& gens, const WeightedOrder& ord,
                            const SpaceParams& sp, std::uint64_t q, const CertifyOptions& options) {
    DegreeRecord rec{q, 0, Rational(0), Rational(0), 0, std::nullopt};
    std::vector<Polynomial> basis = slice_basis(gens, ord, q);
    rec.slice_dim = basis.size();
    if (basis.empty()) return rec;

    std::vector<Polynomial> probes = basis;
    Rng rng = Rng::derived(options.seed, q);
    for (std::size_t s = 0; s < options.samples; ++s) {
        Polynomial h(ord.dim());
        for (const auto& b : basis) {
            long coeff = rng.int_in(-9, 9);
            if (coeff != 0) h = h + GaussianRational(Rational(coeff)) * b;
        }
        if (h.is_zero()) continue;
        probes.push_back(std::move(h));
    }

    Rational sum(0);
    bool first = true;
    std::optional<Rational> min_max;
    for (const auto& h : probes) {
        StabilityRatio sr = stability_ratio(h, gens, ord, sp);
        if (sr.remainder_norm_sq != 0) rec.nonzero_remainders += 1;
        if (first || sr.ratio_sq > rec.max_ratio_sq) rec.max_ratio_sq = sr.ratio_sq;
        sum += sr.ratio_sq;
        first = false;
        if (options.minimal_oracle) {
            Rational mr = minimal_representation_ratio(h, gens, ord, sp);
            if (!min_max || mr > *min_max) min_max = mr;
        }
    }
    rec.mean_ratio_sq = sum / Rational(static_cast<long>(probes.size()));
    rec.max_minimal_ratio_sq = min_max;
    return rec;
}

}  // namespace

StabilityReport certify(const std::vector<Polynomial>& gens, const WeightedOrder& ord,
                        const SpaceParams& sp, std::uint64_t q_max, const CertifyOptions& options) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    std::optional<std::uint64_t> common;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto deg = quasi_homogeneous_degree(gens[i], ord);
        if (!deg)
            throw std::invalid_argument("generator " + std::to_string(i + 1) +
                                        " is not quasi-homogeneous");
        if (!common)
            common = deg;
        else if (*common != *deg)
            throw std::invalid_argument("generators must share one weighted degree; equalize first");
    }
    const std::uint64_t m = *common;
    if (q_max < m) throw std::invalid_argument("q_max is below the generator degree");

    const std::size_t count = static_cast<std::size_t>(q_max - m + 1);
    std::vector<DegreeRecord> records(count);
    std::string failure;

    if (options.parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(count); ++k) {
            try {
                records[static_cast<std::size_t>(k)] =
                    evaluate_slice(gens, ord, sp, m + static_cast<std::uint64_t>(k), options);
            } catch (const std::exception& e) {
#pragma omp critical
                failure = e.what();
            }
        }
    } else {
        for (std::size_t k = 0; k < count; ++k)
            records[k] = evaluate_slice(gens, ord, sp, m + k, options);
    }
    if (!failure.empty()) throw std::runtime_error(failure);

    StabilityReport report{m, q_max, options.samples, options.seed, std::move(records),
                           Rational(0), 0.0, Verdict::inconclusive};

    std::vector<const DegreeRecord*> nonempty;
    for (const auto& r : report.records)
        if (r.slice_dim > 0) nonempty.push_back(&r);
    if (!nonempty.empty()) {
        report.sup_ratio_sq = nonempty[0]->max_ratio_sq;
        for (const auto* r : nonempty)
            if (r->max_ratio_sq > report.sup_ratio_sq) report.sup_ratio_sq = r->max_ratio_sq;
        report.linear_constant_A =
            std::sqrt(static_cast<double>(gens.size()) * report.sup_ratio_sq.get_d());
    }

    if (nonempty.size() >= 3) {
        auto max_over = [&](std::size_t lo, std::size_t hi) {  // [lo, hi)
            Rational mx = nonempty[lo]->max_ratio_sq;
            for (std::size_t i = lo; i < hi; ++i)
                if (nonempty[i]->max_ratio_sq > mx) mx = nonempty[i]->max_ratio_sq;
            return mx;
        };
        const std::size_t n = nonempty.size();
        Rational bottom = max_over(0, n / 3);
        Rational middle = max_over(n / 3, 2 * n / 3);
        Rational top = max_over(2 * n / 3, n);
        if (top <= middle * make_rational(21, 20))
            report.verdict = Verdict::bounded_plateau;
        else if (top >= bottom * 2)
            report.verdict = Verdict::growing;
        else
            report.verdict = Verdict::inconclusive;
    }
    return report;
}

VectorPolynomial counterexample_h(std::uint32_t n) {
    Polynomial a(2), b(2), zero(2);
    a.add_term(Monomial{1, n}, GaussianRational(1));
    b.add_term(Monomial{1, n}, GaussianRational(Rational(-1)));
    return VectorPolynomial({a, b, zero});
}

std::vector<VectorRatioRow> certify_vector(const std::vector<VectorPolynomial>& gens,
                                           const WeightedOrder& ord, const SpaceParams& sp,
                                           std::uint32_t n_max) {
    if (ord.dim() != 2 || sp.d != 2)
        throw std::invalid_argument("the vector certifier is defined for two variables");
    std::vector<VectorRatioRow> rows;
    rows.reserve(n_max);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
        StabilityRatio sr = stability_ratio(counterexample_h(n), gens, ord, sp);
        rows.push_back(VectorRatioRow{n, sr.ratio_sq, sr.remainder_norm_sq});
    }
    return rows;
}

RowOperatorGap row_operator_gap(const std::vector<Polynomial>& gens, const WeightedOrder& ord,
                                const SpaceParams& sp, std::uint32_t D) {
    if (gens.empty()) throw std::invalid_argument("empty generating set");
    if (ord.dim() != sp.d) throw std::invalid_argument("order and space dimension mismatch");
    std::uint64_t max_deg = 0;
    for (const auto& f : gens) {
        if (f.is_zero()) throw std::invalid_argument("zero generator");
        max_deg = std::max(max_deg, max_total_degree(f));
    }
    if (D < max_deg) throw std::invalid_argument("truncation below the generator degrees");

    TruncationBasis basis = TruncationBasis::build(sp, D);
    std::vector<la::Matrix> blocks;
    std::size_t total_cols = 0;
    for (const auto& f : gens) {
        la::Matrix Q = ideal_subspace_frame({f}, basis);
        total_cols += Q.cols();
        blocks.push_back(std::move(Q));
    }
    la::Matrix T(basis.size(), total_cols);
    std::size_t at = 0;
    for (const auto& Q : blocks) {
        for (std::size_t c = 0; c < Q.cols(); ++c, ++at)
            for (std::size_t r = 0; r < basis.size(); ++r) T(r, at) = Q(r, c);
    }

    std::vector<double> sv = la::singular_values(T);
    double sigma_max = sv.empty() ? 0.0 : sv[0];
    if (sigma_max <= 0.0) throw NumericalDiagnosticError("row operator vanished", 0.0);
    double cut = 1e-10 * sigma_max;
    std::size_t kernel = 0;
    double sigma_min = sigma_max;
    for (double s : sv) {
        if (s < cut) {
            ++kernel;
            continue;
        }
        if (s > cut / 10.0 && s < cut * 10.0)
            throw NumericalDiagnosticError("row-operator rank decision is ambiguous",
                                           sigma_max / s);
        sigma_min = std::min(sigma_min, s);
    }
    return RowOperatorGap{D,          sigma_min,        1.0 / (sigma_min * sigma_min),
                          total_cols, basis.size(), kernel};
}

// ---------------------------------------------------------------------------
// Exact minimal-norm representation on a slice.

namespace {

// Solve the dense Hermitian-symmetric linear system M x = rhs over Q(i) by
// Gaussian elimination with nonzero pivoting. M is destroyed.
std::vector<GaussianRational> solve_exact(std::vector<std::vector<GaussianRational>>& M,
                                          std::vector<GaussianRational> rhs) {
    const std::size_t n = M.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && M[perm[piv]][col].is_zero()) ++piv;
        if (piv == n) throw std::invalid_argument("singular system in minimal representation");
        std::swap(perm[col], perm[piv]);
        const GaussianRational pivot = M[perm[col]][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            GaussianRational factor = M[perm[r]][col] / pivot;
            if (factor.is_zero()) continue;
            for (std::size_t c = col; c < n; ++c)
                M[perm[r]][c] = M[perm[r]][c] - factor * M[perm[col]][c];
            rhs[perm[r]] = rhs[perm[r]] - factor * rhs[perm[col]];
        }
    }
    std::vector<GaussianRational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        GaussianRational s = rhs[perm[i]];
        for (std::size_t c = i + 1; c < n; ++c) s = s - M[perm[i]][c] * x[c];
        x[i] = s / M[perm[i]][i];
    }
    return x;
}

}  // namespace

Rational minimal_representation_ratio(const Polynomial& h, const std::vector<Polynomial>& gens,
                                      const WeightedOrder& ord, const SpaceParams& sp) {
    if (h.is_zero()) throw std::invalid_argument("zero polynomial");
    auto qdeg = quasi_homogeneous_degree(h, ord);
    if (!qdeg) throw std::invalid_argument("minimal representation needs a quasi-homogeneous h");
    const std::uint64_t q = *qdeg;

    // products z^b f_i of weighted degree q, tagged with their generator
    std::vector<Polynomial> products;
    std::vector<std::size_t> gen_of;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        auto deg = quasi_homogeneous_degree(gens[i], ord);
        if (!deg) throw std::invalid_argument("generators must be quasi-homogeneous");
        if (*deg > q) continue;
        for (const auto& beta : monomials_of_weighted_degree(ord, q - *deg)) {
            products.push_back(Term{GaussianRational(1), beta} * gens[i]);
            gen_of.push_back(i);
        }
    }
    if (products.empty()) throw std::invalid_argument("h is not in the slice span");
    const std::size_t np = products.size();

    // monomial index for the slice coordinates
    std::map<Monomial, std::size_t, MonomialKeyLess> index;
    for (const auto& p : products)
        for (const auto& [m, c] : p.terms()) index.emplace(m, index.size());
    for (const auto& [m, c] : h.terms())
        if (index.find(m) == index.end()) throw std::invalid_argument("h is not in the slice span");
    const std::size_t nm = index.size();

    // Minimize sum_i ||a_i f_i||^2 = x^H G x subject to A x = b, where G is
    // the block-diagonal Gram of the per-generator products (cross-generator
    // terms do not enter the objective) and A maps coefficients to slice
    // coordinates. G is positive definite: distinct multipliers of one
    // generator are independent. KKT system: [G A^H; A 0][x; y] = [0; b].
    std::vector<std::vector<GaussianRational>> G(np, std::vector<GaussianRational>(np));
    for (std::size_t a = 0; a < np; ++a)
        for (std::size_t b = a; b < np; ++b) {
            if (gen_of[a] != gen_of[b]) continue;
            GaussianRational ip = inner_product(products[b], products[a], sp);
            G[a][b] = ip;  // <p_b, p_a> with conjugation on the second slot
            G[b][a] = ip.conj();
        }
    std::vector<std::vector<GaussianRational>> A(nm, std::vector<GaussianRational>(np));
    for (std::size_t j = 0; j < np; ++j)
        for (const auto& [m, c] : products[j].terms()) A[index.at(m)][j] = c;
    std::vector<GaussianRational> b(nm);
    for (const auto& [m, c] : h.terms()) b[index.at(m)] = c;

    // Eliminate dependent constraint rows first by exact row reduction of
    // [A | b]; a zero row with nonzero right side means h is outside the span.
    {
        std::vector<std::vector<GaussianRational>> Ab(nm, std::vector<GaussianRational>(np + 1));
        for (std::size_t r = 0; r < nm; ++r) {
            for (std::size_t j = 0; j < np; ++j) Ab[r][j] = A[r][j];
            Ab[r][np] = b[r];
        }
        std::vector<std::vector<GaussianRational>> kept;
        std::size_t lead = 0;
        for (std::size_t r = 0; r < nm && lead < np; ++r) {
            std::size_t piv = r;
            while (piv < nm && Ab[piv][lead].is_zero()) ++piv;
            if (piv == nm) {
                --r;
                ++lead;
                continue;
            }
            std::swap(Ab[r], Ab[piv]);
            for (std::size_t rr = 0; rr < nm; ++rr) {
                if (rr == r || Ab[rr][lead].is_zero()) continue;
                GaussianRational f = Ab[rr][lead] / Ab[r][lead];
                for (std::size_t c = lead; c <= np; ++c) Ab[rr][c] = Ab[rr][c] - f * Ab[r][c];
            }
            kept.push_back(Ab[r]);
            ++lead;
        }
        for (std::size_t r = 0; r < nm; ++r) {
            bool zero_row = true;
            for (std::size_t c = 0; c < np; ++c)
                if (!Ab[r][c].is_zero()) zero_row = false;
            if (zero_row && !Ab[r][np].is_zero())
                throw std::invalid_argument("h is not in the slice span");
        }
        const std::size_t nr = kept.size();
        const std::size_t n2 = np + nr;
        std::vector<std::vector<GaussianRational>> K2(n2, std::vector<GaussianRational>(n2));
        std::vector<GaussianRational> rhs2(n2);
        for (std::size_t i = 0; i < np; ++i)
            for (std::size_t j = 0; j < np; ++j) K2[i][j] = G[i][j];
        for (std::size_t r = 0; r < nr; ++r) {
            for (std::size_t j = 0; j < np; ++j) {
                K2[np + r][j] = kept[r][j];
                K2[j][np + r] = kept[r][j].conj();
            }
            rhs2[np + r] = kept[r][np];
        }
        std::vector<GaussianRational> sol = solve_exact(K2, rhs2);
        // objective: x^H G x = sum_i conj(x_i) (G x)_i
        Rational obj(0);
        for (std::size_t i = 0; i < np; ++i) {
            GaussianRational gi;
            for (std::size_t j = 0; j < np; ++j) gi += G[i][j] * sol[j];
            GaussianRational contrib = sol[i].conj() * gi;
            obj += contrib.re;
        }
        return obj / poly_norm_sq(h, sp);
    }
}

std::vector<LinearityCounterexample> division_linearity_probe(const std::vector<Polynomial>& gens,
                                                              const WeightedOrder& ord,
                                                              std::uint64_t q, std::size_t trials,
                                                              std::uint64_t seed) {
    std::vector<LinearityCounterexample> out;
    Rng rng = Rng::derived(seed, q ^ 0x11ULL);
    std::vector<Polynomial> basis = slice_basis(gens, ord, q);
    if (basis.empty()) return out;
    auto random_slice_elem = [&]() {
        Polynomial h(ord.dim());
        for (const auto& b : basis) {
            long c = rng.int_in(-9, 9);
            if (c != 0) h = h + GaussianRational(Rational(c)) * b;
        }
        return h;
    };
    for (std::size_t t = 0; t < trials; ++t) {
        Polynomial h1 = random_slice_elem();
        Polynomial h2 = random_slice_elem();
        if (h1.is_zero() || h2.is_zero() || (h1 + h2).is_zero()) continue;
        DivisionResult d1 = divide(h1, gens, ord);
        DivisionResult d2 = divide(h2, gens, ord);
        DivisionResult ds = divide(h1 + h2, gens, ord);
        bool additive = true;
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (!(ds.quotients[i] == d1.quotients[i] + d2.quotients[i])) additive = false;
        if (!additive) out.push_back(LinearityCounterexample{h1, h2});
    }
    return out;
}

}  // namespace stabdiv
