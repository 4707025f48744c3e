#include "stabdiv/operators.hpp"

#include <algorithm>
#include <cmath>

#include "stabdiv/parse.hpp"
#include "stabdiv/random_poly.hpp"

namespace stabdiv {

namespace {

// all monomials of total degree == n, lexicographically descending on the
// exponent vector (z1-heavy first)
void monomials_of_total_degree(std::size_t d, std::uint32_t n, std::vector<Monomial>& out) {
    Monomial cur(d);
    auto rec = [&](auto&& self, std::size_t v, std::uint32_t rem) -> void {
        if (v + 1 == d) {
            cur[v] = rem;
            out.push_back(cur);
            cur[v] = 0;
            return;
        }
        for (std::int64_t e = rem; e >= 0; --e) {
            cur[v] = static_cast<std::uint32_t>(e);
            self(self, v + 1, rem - static_cast<std::uint32_t>(e));
        }
        cur[v] = 0;
    };
    rec(rec, 0, n);
}

constexpr double kRankTolerance = 1e-10;  // relative Gram eigenvalue cutoff

}  // namespace

TruncationBasis TruncationBasis::build(const SpaceParams& sp, std::uint32_t D) {
    TruncationBasis b{sp, D, {}, {}, {}, {}};
    for (std::uint32_t n = 0; n <= D; ++n) monomials_of_total_degree(sp.d, n, b.monomials);
    b.norm_sq.reserve(b.monomials.size());
    b.norm.reserve(b.monomials.size());
    for (std::size_t k = 0; k < b.monomials.size(); ++k) {
        Rational ns = monomial_norm_sq(b.monomials[k], sp);
        b.norm_sq.push_back(ns);
        b.norm.push_back(std::sqrt(ns.get_d()));
        b.index.emplace(b.monomials[k], k);
    }
    return b;
}

std::vector<la::cd> TruncationBasis::coordinates(const Polynomial& p) const {
    std::vector<la::cd> v(size(), la::cd(0.0, 0.0));
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::invalid_argument("polynomial exceeds the truncation degree");
        v[it->second] = la::cd(c.re.get_d(), c.im.get_d()) * norm[it->second];
    }
    return v;
}

OperatorMatrix mult_op(std::size_t i, const SpaceParams& sp, std::uint32_t D) {
    if (i >= sp.d) throw std::invalid_argument("variable index out of range");
    TruncationBasis dom = TruncationBasis::build(sp, D);
    TruncationBasis cod = TruncationBasis::build(sp, D + 1);
    la::Matrix M(cod.size(), dom.size());
    for (std::size_t col = 0; col < dom.size(); ++col) {
        Monomial up = dom.monomials[col];
        up[i] += 1;
        std::size_t row = cod.index.at(up);
        // ||z^(a+e_i)|| / ||z^a||, exact ratio converted once
        Rational ratio_sq = cod.norm_sq[row] / dom.norm_sq[col];
        M(row, col) = std::sqrt(ratio_sq.get_d());
    }
    return OperatorMatrix{std::move(M), std::move(dom), std::move(cod)};
}

la::Matrix mult_op_compressed(std::size_t i, const TruncationBasis& basis) {
    if (i >= basis.sp.d) throw std::invalid_argument("variable index out of range");
    la::Matrix M(basis.size(), basis.size());
    for (std::size_t col = 0; col < basis.size(); ++col) {
        Monomial up = basis.monomials[col];
        up[i] += 1;
        auto it = basis.index.find(up);
        if (it == basis.index.end()) continue;  // shifted past the truncation
        Rational ratio_sq = basis.norm_sq[it->second] / basis.norm_sq[col];
        M(it->second, col) = std::sqrt(ratio_sq.get_d());
    }
    return M;
}

namespace {

// columns: coordinates of all monomial multiples z^a f_i inside the truncation
la::Matrix ideal_slice_columns(const std::vector<Polynomial>& gens, const TruncationBasis& basis) {
    std::vector<std::vector<la::cd>> cols;
    for (const auto& f : gens) {
        if (f.is_zero()) throw std::invalid_argument("zero generator");
        std::uint64_t degf = max_total_degree(f);
        if (degf > basis.max_degree)
            throw std::invalid_argument("truncation too small for a generator");
        std::vector<Monomial> alphas;
        for (std::uint32_t n = 0; n + degf <= basis.max_degree; ++n)
            monomials_of_total_degree(basis.sp.d, n, alphas);
        for (const auto& a : alphas)
            cols.push_back(basis.coordinates(Term{GaussianRational(1), a} * f));
    }
    la::Matrix V(basis.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < basis.size(); ++i) V(i, j) = cols[j][i];
    return V;
}

}  // namespace

la::Matrix ideal_subspace_frame(const std::vector<Polynomial>& gens, const TruncationBasis& basis) {
    la::Matrix V = ideal_slice_columns(gens, basis);
    la::Matrix G = la::matmul(la::adjoint(V), V);
    la::HermitianEig eig = la::eig_hermitian(G);
    double lambda_max = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
    if (lambda_max <= 0.0) throw std::invalid_argument("generators span nothing in the truncation");
    double cut = kRankTolerance * lambda_max;
    for (double lambda : eig.eigenvalues) {
        if (lambda > cut / 10.0 && lambda < cut * 10.0)
            throw NumericalDiagnosticError(
                "Gram rank decision is ambiguous near the tolerance cut", lambda_max / lambda);
    }
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
        if (eig.eigenvalues[k] > cut) kept.push_back(k);
    la::Matrix U(G.rows(), kept.size());
    for (std::size_t c = 0; c < kept.size(); ++c) {
        double inv_sqrt = 1.0 / std::sqrt(eig.eigenvalues[kept[c]]);
        for (std::size_t r = 0; r < G.rows(); ++r)
            U(r, c) = eig.eigenvectors(r, kept[c]) * inv_sqrt;
    }
    return la::matmul(V, U);  // orthonormal columns
}

OperatorMatrix ideal_projection(const std::vector<Polynomial>& gens, const SpaceParams& sp,
                                std::uint32_t D) {
    TruncationBasis basis = TruncationBasis::build(sp, D);
    la::Matrix Q = ideal_subspace_frame(gens, basis);
    la::Matrix P = la::matmul(Q, la::adjoint(Q));
    return OperatorMatrix{std::move(P), basis, basis};
}

OperatorMatrix cross_commutator(std::size_t i, std::size_t j, const SpaceParams& sp,
                                std::uint32_t D) {
    TruncationBasis basis = TruncationBasis::build(sp, D);
    la::Matrix Si = mult_op_compressed(i, basis);
    la::Matrix Sj_adj = la::adjoint(mult_op_compressed(j, basis));
    la::Matrix C = la::matmul(Si, Sj_adj) - la::matmul(Sj_adj, Si);
    return OperatorMatrix{std::move(C), basis, basis};
}

la::Matrix interior_block(const la::Matrix& A, const TruncationBasis& basis, std::uint32_t maxdeg) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (basis.monomials[k].total_degree() <= maxdeg) keep.push_back(k);
    la::Matrix B(keep.size(), keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) B(r, c) = A(keep[r], keep[c]);
    return B;
}

ScanResult essential_normality_scan(const std::vector<Polynomial>& gens, const SpaceParams& sp,
                                    double p, const std::vector<std::uint32_t>& D_list) {
    if (D_list.empty()) throw std::invalid_argument("empty truncation list");
    for (std::size_t k = 1; k < D_list.size(); ++k)
        if (D_list[k] <= D_list[k - 1])
            throw std::invalid_argument("truncation list must be strictly increasing");
    std::uint64_t max_gen_deg = 0;
    for (const auto& f : gens) {
        if (f.is_zero()) throw std::invalid_argument("zero generator");
        max_gen_deg = std::max(max_gen_deg, max_total_degree(f));
    }
    if (D_list.front() < max_gen_deg + 2)
        throw std::invalid_argument("truncation too small relative to the generator degrees");

    ScanResult out;
    out.p = p;
    out.p_in_recommended_range = p > static_cast<double>(sp.d);

    std::vector<double> prev(sp.d, 0.0);
    bool have_prev = false;
    for (std::uint32_t D : D_list) {
        TruncationBasis basis = TruncationBasis::build(sp, D);
        la::Matrix Q = ideal_subspace_frame(gens, basis);
        la::Matrix P = la::matmul(Q, la::adjoint(Q));
        la::Matrix IP = la::Matrix::identity(basis.size()) - P;
        for (std::size_t j = 0; j < sp.d; ++j) {
            la::Matrix Sj_adj = la::adjoint(mult_op_compressed(j, basis));
            la::Matrix T = la::matmul(la::matmul(IP, Sj_adj), P);
            la::Matrix inner = interior_block(T, basis, D - 1);
            double value = la::schatten_norm(inner, 2.0 * p);
            double full = la::schatten_norm(T, 2.0 * p);
            double inc = have_prev ? value - prev[j] : 0.0;
            out.values.push_back(ScanValue{D, j, value, full, inc});
            prev[j] = value;
        }
        have_prev = true;
    }
    return out;
}

FangXiaReport fang_xia_probe(const Polynomial& f, const SpaceParams& sp, std::uint32_t D,
                             std::size_t samples, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("zero generator");
    std::uint64_t degf = max_total_degree(f);
    if (D < degf + 2) throw std::invalid_argument("truncation too small");

    TruncationBasis basis = TruncationBasis::build(sp, D);
    la::Matrix Q = ideal_subspace_frame({f}, basis);
    la::Matrix P = la::matmul(Q, la::adjoint(Q));
    la::Matrix comp = la::Matrix::identity(basis.size()) - P;
    std::vector<la::Matrix> shifts_adj;
    for (std::size_t j = 0; j < sp.d; ++j)
        shifts_adj.push_back(la::adjoint(mult_op_compressed(j, basis)));

    SpaceParams up(sp.d, sp.t + 1);
    Rng rng = Rng::derived(seed, 0xfa);
    FangXiaReport report;
    report.max_ratio = 0.0;
    RandomPolyOptions opts;
    opts.max_total_degree = static_cast<std::uint32_t>(D - degf);
    opts.gaussian_parts = true;
    opts.term_probability = 0.35;
    for (std::size_t s = 0; s < samples; ++s) {
        Polynomial g = random_polynomial(sp.d, opts, rng);
        Polynomial gf = g * f;
        std::vector<la::cd> v = basis.coordinates(gf);
        double lhs = 0.0;
        for (std::size_t j = 0; j < sp.d; ++j) {
            std::vector<la::cd> w = la::apply(shifts_adj[j], v);
            std::vector<la::cd> u = la::apply(comp, w);
            double nrm = 0.0;
            for (const auto& x : u) nrm += std::norm(x);
            lhs = std::max(lhs, std::sqrt(nrm));
        }
        double rhs = std::sqrt(poly_norm_sq(gf, up).get_d());
        double ratio = rhs > 0.0 ? lhs / rhs : 0.0;
        report.samples.push_back(FangXiaSample{format(g), lhs, rhs, ratio});
        report.max_ratio = std::max(report.max_ratio, ratio);
    }
    return report;
}

namespace {

double vec_norm(const std::vector<la::cd>& x) {
    double s = 0.0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace

AngleCheckReport angle_bound_check(const la::Matrix& m_basis, const std::vector<la::cd>& v,
                                   const la::Matrix& T, std::size_t samples, std::uint64_t seed) {
    const std::size_t N = m_basis.rows();
    if (v.size() != N || T.cols() != N)
        throw std::invalid_argument("angle check dimension mismatch");

    // orthonormalize M via its Gram matrix
    la::Matrix G = la::matmul(la::adjoint(m_basis), m_basis);
    la::HermitianEig eig = la::eig_hermitian(G);
    double lambda_max = eig.eigenvalues.back();
    double cut = kRankTolerance * lambda_max;
    std::vector<std::size_t> kept;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
        if (eig.eigenvalues[k] > cut) kept.push_back(k);
    la::Matrix U(G.rows(), kept.size());
    for (std::size_t c = 0; c < kept.size(); ++c) {
        double inv_sqrt = 1.0 / std::sqrt(eig.eigenvalues[kept[c]]);
        for (std::size_t r = 0; r < G.rows(); ++r)
            U(r, c) = eig.eigenvectors(r, kept[c]) * inv_sqrt;
    }
    la::Matrix QM = la::matmul(m_basis, U);

    // unit vector for N
    std::vector<la::cd> vhat = v;
    double vn = vec_norm(vhat);
    if (vn == 0.0) throw std::invalid_argument("zero vector spans no subspace");
    for (auto& x : vhat) x /= vn;

    // c = || P_M v ||
    std::vector<la::cd> pv = la::apply(la::adjoint(QM), vhat);
    double c = vec_norm(pv);
    if (c >= 1.0 - 1e-8)
        throw NumericalDiagnosticError("angle between N and the closure of M is degenerate", c);

    la::Matrix Tv(T.rows(), 1);
    std::vector<la::cd> tv = la::apply(T, vhat);
    for (std::size_t i = 0; i < T.rows(); ++i) Tv(i, 0) = tv[i];
    double C = std::max(la::operator_norm(la::matmul(T, QM)), la::operator_norm(Tv));
    double factor = C * std::sqrt(2.0) / std::sqrt(1.0 - c);

    Rng rng = Rng::derived(seed, 0xa11e);
    AngleCheckReport rep{c, C, factor, samples, 0, 0, 0.0};
    const std::size_t mdim = QM.cols();
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<la::cd> coeff(mdim);
        for (auto& x : coeff) x = la::cd(rng.sym_real(), rng.sym_real());
        std::vector<la::cd> m = la::apply(QM, coeff);
        la::cd xi(rng.sym_real(), rng.sym_real());
        std::vector<la::cd> x(N);
        double nm = 0.0, nn = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            la::cd n_i = xi * vhat[i];
            x[i] = m[i] + n_i;
        }
        nm = vec_norm(m);
        nn = std::abs(xi);
        double nx = vec_norm(x);

        if (nx * nx < (1.0 - c) * (nm * nm + nn * nn) * (1.0 - 1e-9))
            rep.intermediate_violations += 1;

        double lhs = vec_norm(la::apply(T, x));
        double bound = factor * nx;
        if (bound > 0.0) rep.worst_ratio = std::max(rep.worst_ratio, lhs / bound);
        if (lhs > bound * (1.0 + 1e-9)) rep.violations += 1;
    }
    return rep;
}

AngleInstance make_angle_instance(std::size_t ambient_dim, std::size_t m_dim, double cos_angle,
                                  std::uint64_t seed) {
    if (m_dim + 1 > ambient_dim) throw std::invalid_argument("subspace does not fit");
    if (cos_angle < 0.0 || cos_angle >= 1.0) throw std::invalid_argument("need 0 <= c < 1");
    Rng rng = Rng::derived(seed, 0x1237);

    // random frame, orthonormalized by modified Gram-Schmidt; the first
    // m_dim columns span M, the next gives the orthogonal direction
    la::Matrix F(ambient_dim, m_dim + 1);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        for (std::size_t j = 0; j <= m_dim; ++j) F(i, j) = la::cd(rng.sym_real(), rng.sym_real());
    for (std::size_t j = 0; j <= m_dim; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            la::cd dot = 0.0;
            for (std::size_t i = 0; i < ambient_dim; ++i) dot += std::conj(F(i, k)) * F(i, j);
            for (std::size_t i = 0; i < ambient_dim; ++i) F(i, j) -= dot * F(i, k);
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < ambient_dim; ++i) nrm += std::norm(F(i, j));
        nrm = std::sqrt(nrm);
        for (std::size_t i = 0; i < ambient_dim; ++i) F(i, j) /= nrm;
    }

    AngleInstance inst;
    inst.m_basis = la::Matrix(ambient_dim, m_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        for (std::size_t j = 0; j < m_dim; ++j) inst.m_basis(i, j) = F(i, j);

    inst.v.resize(ambient_dim);
    double sin_angle = std::sqrt(1.0 - cos_angle * cos_angle);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        inst.v[i] = cos_angle * F(i, 0) + sin_angle * F(i, m_dim);

    inst.T = la::Matrix(ambient_dim, ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j)
            inst.T(i, j) = la::cd(rng.sym_real(), rng.sym_real()) / std::sqrt(double(ambient_dim));
    return inst;
}

}  // namespace stabdiv
