#include <doctest.h>

#include <algorithm>

#include "stabdiv/groebner.hpp"
#include "stabdiv/parse.hpp"
#include "stabdiv/random_poly.hpp"
#include "stabdiv/rng.hpp"

using namespace stabdiv;

namespace {

Polynomial P(const std::string& s, std::size_t d = 2) { return parse_polynomial(s, d); }

bool contains(const std::vector<Polynomial>& set, const Polynomial& p) {
    return std::find(set.begin(), set.end(), p) != set.end();
}

}  // namespace

TEST_CASE("s-polynomials") {
    WeightedOrder total({1, 1});
    CHECK(s_polynomial(P("x^2"), P("x*y"), total).is_zero());
    CHECK(s_polynomial(P("x^2+y^2"), P("x^2+y^2"), total).is_zero());
    CHECK(s_polynomial(P("x^2+y^2"), P("x*y"), total) == P("y^3"));
    CHECK_THROWS_AS(s_polynomial(P("0"), P("x"), total), std::invalid_argument);
}

TEST_CASE("buchberger on the worked examples") {
    WeightedOrder total({1, 1});

    GroebnerBasis gb = buchberger({P("x^2"), P("x*y")}, total);
    CHECK(gb.generators.size() == 2);
    CHECK(contains(gb.generators, P("x^2")));
    CHECK(contains(gb.generators, P("x*y")));

    gb = buchberger({P("x^2+y^2"), P("x*y")}, total);
    CHECK(gb.generators.size() == 3);
    CHECK(contains(gb.generators, P("x^2+y^2")));
    CHECK(contains(gb.generators, P("x*y")));
    CHECK(contains(gb.generators, P("y^3")));

    gb = buchberger({P("x")}, total);
    CHECK(gb.generators.size() == 1);
    CHECK(gb.generators[0] == P("x"));

    CHECK_THROWS_AS(buchberger({}, total), std::invalid_argument);
}

TEST_CASE("membership") {
    WeightedOrder total({1, 1});
    GroebnerBasis gb = buchberger({P("x")}, total);
    CHECK(is_member(P("x^3 + x*y^2"), gb));
    CHECK_FALSE(is_member(P("y"), gb));
    CHECK(is_member(P("0"), gb));
}

TEST_CASE("membership holds for random combinations") {
    Rng rng(55);
    RandomPolyOptions opts;
    opts.max_total_degree = 4;
    WeightedOrder total({1, 1});
    GroebnerBasis gb = buchberger({P("x^2+y^2"), P("x*y - y^2")}, total);
    for (int i = 0; i < 50; ++i) {
        Polynomial combo(2);
        combo = combo + random_polynomial(2, opts, rng) * P("x^2+y^2");
        combo = combo + random_polynomial(2, opts, rng) * P("x*y - y^2");
        CHECK(is_member(combo, gb));
    }
}

TEST_CASE("every s-pair of an output basis reduces to zero") {
    Rng rng(57);
    RandomPolyOptions opts;
    opts.max_total_degree = 5;
    opts.term_probability = 0.4;
    WeightedOrder ord({2, 1});
    int done = 0;
    while (done < 15) {
        std::vector<Polynomial> gens;
        for (int g = 0; g < 3; ++g) {
            Polynomial p = random_polynomial(2, opts, rng);
            if (!p.is_zero()) gens.push_back(p);
        }
        if (gens.empty()) continue;
        GroebnerBasis gb = buchberger(gens, ord);
        for (std::size_t i = 0; i < gb.generators.size(); ++i)
            for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
                Polynomial s = s_polynomial(gb.generators[i], gb.generators[j], ord);
                CHECK(divide(s, gb.generators, ord).remainder.is_zero());
            }
        // the originals reduce to zero against the output
        for (const auto& g : gens) CHECK(is_member(g, gb));
        ++done;
    }
}

TEST_CASE("quasi-homogeneous closure") {
    WeightedOrder total({1, 1});
    GroebnerBasis gb = quasi_homogeneous_basis({P("x^2"), P("x*y")}, total);
    for (const auto& g : gb.generators) CHECK(quasi_homogeneous_degree(g, total).has_value());

    WeightedOrder w21({2, 1});
    gb = quasi_homogeneous_basis({P("x + y^2")}, w21);
    CHECK(gb.generators.size() == 1);
    CHECK(quasi_homogeneous_degree(gb.generators[0], w21) == 2);

    gb = quasi_homogeneous_basis({P("x^2+y^2"), P("x*y")}, total);
    CHECK(gb.generators.size() == 3);
    for (const auto& g : gb.generators) {
        auto comps = quasi_components(g, total);
        CHECK(comps.size() == 1);
    }

    CHECK_THROWS_AS(quasi_homogeneous_basis({P("x + y^2")}, total), std::invalid_argument);
}

TEST_CASE("degree equalization") {
    WeightedOrder total({1, 1});
    GroebnerBasis gb = buchberger({P("x")}, total);
    auto eq = equalize_degrees(gb, 2);
    CHECK(eq.size() == 2);
    CHECK(contains(eq, P("x^2")));
    CHECK(contains(eq, P("x*y")));

    // a generator already at the target stays unchanged
    gb = buchberger({P("x^2"), P("y")}, total);
    eq = equalize_degrees(gb, 2);
    CHECK(contains(eq, P("x^2")));
    CHECK(contains(eq, P("x*y")));
    CHECK(contains(eq, P("y^2")));

    WeightedOrder w21({2, 1});
    gb = buchberger({P("x"), P("y^2")}, w21);
    eq = equalize_degrees(gb, 4);
    CHECK(eq.size() == 3);
    CHECK(contains(eq, P("x^2")));
    CHECK(contains(eq, P("x*y^2")));
    CHECK(contains(eq, P("y^4")));

    // unattainable degree reports the offending generator
    WeightedOrder w22({2, 2});
    gb = buchberger({P("x")}, w22);
    CHECK_THROWS_WITH_AS(equalize_degrees(gb, 3), doctest::Contains("unattainable"),
                         std::invalid_argument);
}

TEST_CASE("default equalization target") {
    WeightedOrder w21({2, 1});
    GroebnerBasis gb = buchberger({P("x"), P("y^2")}, w21);
    std::uint64_t m = default_equalize_degree(gb);
    CHECK(m >= 2);
    CHECK_NOTHROW(equalize_degrees(gb, m));
}

TEST_CASE("equalized sets generate the same high-degree slices") {
    // exact coefficient-space comparison degree by degree
    auto slice_span_dim = [](const std::vector<Polynomial>& gens, const WeightedOrder& ord,
                             std::uint64_t q, bool only_high, std::uint64_t floor_deg) {
        // row reduce the products z^b g of weighted degree q
        std::vector<Polynomial> rows;
        for (const auto& g : gens) {
            auto deg = quasi_homogeneous_degree(g, ord);
            REQUIRE(deg.has_value());
            if (*deg > q) continue;
            if (only_high && *deg < floor_deg) continue;
            for (const auto& beta : monomials_of_weighted_degree(ord, q - *deg))
                rows.push_back(Term{GaussianRational(1), beta} * g);
        }
        std::vector<Polynomial> pivots;
        std::size_t rank = 0;
        for (auto& r : rows) {
            Polynomial red = r;
            bool progress = true;
            while (!red.is_zero() && progress) {
                progress = false;
                for (const auto& p : pivots) {
                    if (leading_monomial(p, ord) == leading_monomial(red, ord)) {
                        red = red - (leading_term(red, ord).coeff / leading_term(p, ord).coeff) * p;
                        progress = true;
                        break;
                    }
                }
            }
            if (!red.is_zero()) {
                pivots.push_back(red);
                ++rank;
            }
        }
        return rank;
    };

    for (const auto& wv : {std::vector<std::uint32_t>{1, 1}, {2, 1}}) {
        WeightedOrder ord(wv);
        GroebnerBasis gb = quasi_homogeneous_basis({P("x^2"), P("x*y"), P("y^3")}, ord);
        std::uint64_t m = default_equalize_degree(gb);
        auto eq = equalize_degrees(gb, m);
        GroebnerBasis eq_gb{eq, ord, false};
        for (std::uint64_t q = m; q <= m + 10; ++q) {
            std::size_t lhs = slice_span_dim(eq, ord, q, false, 0);
            std::size_t rhs = slice_span_dim(gb.generators, ord, q, false, 0);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("staircase codimension") {
    WeightedOrder total({1, 1});
    CHECK(staircase_codimension(buchberger({P("x"), P("y")}, total)) == Codimension{true, 1});
    CHECK_FALSE(staircase_codimension(buchberger({P("x")}, total)).finite);
    CHECK(staircase_codimension(buchberger({P("x^2"), P("x*y"), P("y^3")}, total)) ==
          Codimension{true, 4});
}

TEST_CASE("ideal gcd and the principal/cofactor split") {
    BeurlingForm bf = beurling_form({P("x^2*y"), P("x*y^2")});
    CHECK(bf.gcd_part == P("x*y"));
    REQUIRE(bf.cofactors.size() == 2);
    CHECK(bf.cofactors[0] == P("x"));
    CHECK(bf.cofactors[1] == P("y"));
    CHECK(bf.codimension == Codimension{true, 1});

    bf = beurling_form({P("x")});
    CHECK(bf.gcd_part == P("x"));
    CHECK(bf.cofactors[0] == P("1"));
    CHECK(bf.codimension == Codimension{true, 0});

    bf = beurling_form({P("x^2+x*y"), P("x^2")});
    CHECK(bf.gcd_part == P("x"));
    CHECK(bf.cofactors[0] == P("x+y"));
    CHECK(bf.cofactors[1] == P("x"));
    CHECK(bf.codimension.finite);

    CHECK_THROWS_AS(ideal_gcd({parse_polynomial("z1", 3)}), std::invalid_argument);
}

TEST_CASE("beurling consistency on random products") {
    Rng rng(91);
    RandomPolyOptions small;
    small.max_total_degree = 3;
    small.term_probability = 0.45;
    small.gaussian_parts = true;
    WeightedOrder total({1, 1});
    int done = 0;
    while (done < 20) {
        Polynomial p = random_polynomial(2, small, rng);
        Polynomial j1 = random_polynomial(2, small, rng);
        Polynomial j2 = random_polynomial(2, small, rng);
        if (p.is_zero() || j1.is_zero() || j2.is_zero()) continue;
        BeurlingForm bf;
        try {
            bf = beurling_form({p * j1, p * j2});
        } catch (const std::invalid_argument&) {
            continue;
        }
        // multiplying back reproduces the inputs exactly
        CHECK(bf.gcd_part * bf.cofactors[0] == p * j1);
        CHECK(bf.gcd_part * bf.cofactors[1] == p * j2);
        // p divides the recovered gcd
        DivisionResult dr = divide(bf.gcd_part, {p}, total);
        CHECK(dr.remainder.is_zero());
        // random elements of p*<cofactors> are members of the original ideal
        GroebnerBasis gb = buchberger({p * j1, p * j2}, total);
        for (int s = 0; s < 5; ++s) {
            Polynomial a = random_polynomial(2, small, rng);
            Polynomial b = random_polynomial(2, small, rng);
            Polynomial elem = bf.gcd_part * (a * bf.cofactors[0] + b * bf.cofactors[1]);
            CHECK(is_member(elem, gb));
        }
        ++done;
    }
}
