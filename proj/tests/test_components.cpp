#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "langweil/components.hpp"
#include "langweil/rng.hpp"

using namespace lw;

namespace {

// Product of factors^multiplicity, for the reconstruction check.
MultiPoly rebuild(const std::vector<std::pair<MultiPoly, int>>& factors, const FieldPtr& field) {
    MultiPoly acc = MultiPoly::constant(field, 2, field->one());
    for (const auto& [f, mult] : factors)
        for (int i = 0; i < mult; ++i) acc = acc * f;
    return acc;
}

bool scalar_multiple(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const FieldPtr& F = a.field();
    Elem s = F->div(a.leading_coefficient(), b.leading_coefficient());
    return a == b.scaled(s);
}

}  // namespace

TEST_CASE("monomial split") {
    auto F3 = Field::make(3, 1);
    auto fac = factorize_bivariate(parse_poly("x*y", 2, F3));
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].second == 1);
    CHECK(fac[1].second == 1);
    CHECK(scalar_multiple(rebuild(fac, F3), parse_poly("x*y", 2, F3)));
}

TEST_CASE("repeated factor carries multiplicity") {
    auto F2 = Field::make(2, 1);
    auto fac = factorize_bivariate(parse_poly("x^2+y^2", 2, F2));  // (x+y)^2
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == parse_poly("x+y", 2, F2));
    CHECK(fac[0].second == 2);
}

TEST_CASE("the maximal cubic over F_4 is irreducible") {
    auto F4 = Field::make(2, 2);
    auto fac = factorize_bivariate(parse_poly("y^2+y+x^3", 2, F4));
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].second == 1);
    CHECK(fac[0].first.total_degree() == 3);
}

TEST_CASE("factorization reconstructs the input up to a scalar") {
    SplitRng rng(71);
    for (auto [p, m] : {std::pair<std::uint64_t, std::uint32_t>{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
        auto F = Field::make(p, m);
        for (int rep = 0; rep < 15; ++rep) {
            MultiPoly g(F, 2);
            for (int t = 0; t < 5; ++t) {
                std::uint32_t a = static_cast<std::uint32_t>(rng.next_below(5));
                std::uint32_t b = static_cast<std::uint32_t>(rng.next_below(5 - a));
                g.add_term({a, b}, static_cast<Elem>(rng.next_below(F->q())));
            }
            if (g.is_zero() || *g.total_degree() < 1) continue;
            auto fac = factorize_bivariate(g);
            CHECK(scalar_multiple(rebuild(fac, F), g));
            for (const auto& [f, mult] : fac) {
                CHECK(mult >= 1);
                // each reported factor must itself resist further splitting
                CHECK(factorize_bivariate(f).size() == 1);
            }
        }
    }
}

TEST_CASE("factorization caps") {
    auto F2 = Field::make(2, 1);
    CHECK_THROWS_AS(factorize_bivariate(parse_poly("x^5+y", 2, F2)), DegreeCapExceeded);
    auto F25 = Field::make(5, 2);
    CHECK_THROWS_AS(factorize_bivariate(parse_poly("x^2+y", 2, F25)), OrderCapExceeded);
    CHECK_THROWS_AS(factorize_bivariate(parse_poly("x+y+z", 3, F2)), ArityMismatch);
    CHECK_THROWS_AS(factorize_bivariate(MultiPoly::zero(F2, 2)), Error);
}

TEST_CASE("linear polynomials are absolutely irreducible") {
    auto F7 = Field::make(7, 1);
    CHECK(is_absolutely_irreducible(parse_poly("x+y+1", 2, F7)));
}

TEST_CASE("conjugate pair over F_3 is not absolutely irreducible") {
    auto F3 = Field::make(3, 1);
    CHECK(!is_absolutely_irreducible(parse_poly("x^2+y^2", 2, F3)));
}

TEST_CASE("the maximal cubic over F_4 is absolutely irreducible") {
    auto F4 = Field::make(2, 2);
    CHECK(is_absolutely_irreducible(parse_poly("y^2+y+x^3", 2, F4)));
}

TEST_CASE("component counts match the factor structure") {
    auto F5 = Field::make(5, 1);
    CHECK(component_count(parse_poly("x*y", 2, F5)).k == 2);
    // -1 is a square mod 5, so x^2+y^2 splits into two rational lines
    CHECK(component_count(parse_poly("x^2+y^2", 2, F5)).k == 2);
    auto F3 = Field::make(3, 1);
    CHECK(component_count(parse_poly("x^2+y^2", 2, F3)).k == 0);
}

TEST_CASE("report invariants: k bounded by the degree sum") {
    SplitRng rng(5);
    auto F4 = Field::make(2, 2);
    for (int rep = 0; rep < 10; ++rep) {
        MultiPoly g(F4, 2);
        for (int t = 0; t < 4; ++t) {
            std::uint32_t a = static_cast<std::uint32_t>(rng.next_below(4));
            std::uint32_t b = static_cast<std::uint32_t>(rng.next_below(4 - a));
            g.add_term({a, b}, static_cast<Elem>(rng.next_below(4)));
        }
        if (g.is_zero() || *g.total_degree() < 1) continue;
        ComponentReport rep2 = component_count(g);
        int degsum = 0;
        for (const auto& f : rep2.factors) degsum += f.degree;
        CHECK(rep2.k <= degsum);
        CHECK(degsum <= *g.total_degree());
    }
}

TEST_CASE("component count is invariant under affine coordinate changes") {
    auto F5 = Field::make(5, 1);
    SplitRng rng(99);
    std::vector<MultiPoly> fixtures = {
        parse_poly("x*y", 2, F5),        parse_poly("x^2+y^2", 2, F5),
        parse_poly("y^2-x^3-x", 2, F5),  parse_poly("x^2+y^2+1", 2, F5),
        parse_poly("x^2-y^2+x+1", 2, F5)};
    for (const auto& g : fixtures) {
        int k0 = component_count(g).k;
        for (int rep = 0; rep < 6; ++rep) {
            // invertible 2x2 matrix + translation
            Elem a, b, c, d;
            do {
                a = static_cast<Elem>(rng.next_below(5));
                b = static_cast<Elem>(rng.next_below(5));
                c = static_cast<Elem>(rng.next_below(5));
                d = static_cast<Elem>(rng.next_below(5));
            } while (F5->sub(F5->mul(a, d), F5->mul(b, c)) == 0);
            Elem e = static_cast<Elem>(rng.next_below(5)), f = static_cast<Elem>(rng.next_below(5));
            MultiPoly X = MultiPoly::variable(F5, 2, 0), Y = MultiPoly::variable(F5, 2, 1);
            MultiPoly u = X.scaled(a) + Y.scaled(b) + MultiPoly::constant(F5, 2, e);
            MultiPoly v = X.scaled(c) + Y.scaled(d) + MultiPoly::constant(F5, 2, f);
            MultiPoly h = g.substitute({u, v});
            CHECK(component_count(h).k == k0);
        }
    }
}

TEST_CASE("JSON report shape") {
    auto F3 = Field::make(3, 1);
    auto j = component_report_json(component_count(parse_poly("x*y", 2, F3)));
    CHECK(j["k"] == 2);
    CHECK(j["factors"].size() == 2);
    CHECK(j["factors"][0].contains("poly"));
    CHECK(j["factors"][0].contains("mult"));
    CHECK(j["factors"][0].contains("deg"));
    CHECK(j["factors"][0].contains("abs_irred"));
}
