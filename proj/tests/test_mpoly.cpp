#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "langweil/mpoly.hpp"
#include "langweil/plane.hpp"
#include "langweil/rng.hpp"

using namespace lw;

namespace {

MultiPoly random_poly(const FieldPtr& field, int nvars, int dmax, SplitRng& rng) {
    MultiPoly f(field, nvars);
    int terms = 2 + static_cast<int>(rng.next_below(6));
    for (int t = 0; t < terms; ++t) {
        ExpVec e(nvars, 0);
        int budget = dmax;
        for (int v = 0; v < nvars; ++v) {
            e[v] = static_cast<std::uint32_t>(rng.next_below(budget + 1));
            budget -= static_cast<int>(e[v]);
        }
        f.add_term(e, static_cast<Elem>(rng.next_below(field->q())));
    }
    return f;
}

std::vector<Elem> random_point(const FieldPtr& field, int nvars, SplitRng& rng) {
    std::vector<Elem> p(nvars);
    for (auto& c : p) c = static_cast<Elem>(rng.next_below(field->q()));
    return p;
}

}  // namespace

TEST_CASE("parse and evaluate basics") {
    auto F2 = Field::make(2, 1);
    MultiPoly f = parse_poly("y^2+y+x^3", 2, F2);
    CHECK(f.evaluate(std::vector<Elem>{0, 0}) == 0);
    CHECK(*f.total_degree() == 3);

    auto F7 = Field::make(7, 1);
    MultiPoly g = parse_poly("x", 1, F7);
    CHECK(g.evaluate(std::vector<Elem>{5}) == 5);

    CHECK(*parse_poly("y^2+y-x^3", 2, F7).total_degree() == 3);
}

TEST_CASE("parse errors carry a position") {
    auto F5 = Field::make(5, 1);
    CHECK_THROWS_AS(parse_poly("x^2+*y", 2, F5), ParseError);
    CHECK_THROWS_AS(parse_poly("x5", 2, F5), ParseError);  // index out of range
    CHECK_THROWS_AS(parse_poly("", 2, F5), ParseError);
    try {
        parse_poly("x^2+*y", 2, F5);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("extension coefficients parse in parentheses") {
    auto F4 = Field::make(2, 2);
    MultiPoly f = parse_poly("(t+1)*x^2*y+(t)*y", 2, F4);
    Elem t = F4->parse_element("t");
    CHECK(f.evaluate(std::vector<Elem>{F4->one(), F4->one()}) ==
          F4->add(F4->add(t, F4->one()), t));
}

TEST_CASE("parse of printed form is the identity") {
    auto F5 = Field::make(5, 1);
    auto F9 = Field::make(3, 2);
    SplitRng rng(11);
    for (int i = 0; i < 50; ++i) {
        for (const auto& field : {F5, F9}) {
            MultiPoly f = random_poly(field, 3, 4, rng);
            if (f.is_zero()) continue;
            MultiPoly g = parse_poly(f.str(), 3, field);
            CHECK(g == f);
        }
    }
}

TEST_CASE("evaluation is additive and multiplicative on random data") {
    auto F9 = Field::make(3, 2);
    SplitRng rng(5);
    for (int i = 0; i < 40; ++i) {
        MultiPoly f = random_poly(F9, 2, 3, rng), g = random_poly(F9, 2, 3, rng);
        auto pt = random_point(F9, 2, rng);
        CHECK((f + g).evaluate(pt) == F9->add(f.evaluate(pt), g.evaluate(pt)));
        CHECK((f * g).evaluate(pt) == F9->mul(f.evaluate(pt), g.evaluate(pt)));
    }
}

TEST_CASE("zero polynomial degree is a sentinel, not a number") {
    auto F3 = Field::make(3, 1);
    CHECK(!MultiPoly::zero(F3, 2).total_degree().has_value());
    CHECK(*MultiPoly::constant(F3, 2, 1).total_degree() == 0);
}

TEST_CASE("homogenize and dehomogenize") {
    auto F5 = Field::make(5, 1);
    MultiPoly f = parse_poly("y^2+y-x^3", 2, F5);
    MultiPoly h = homogenize(f, 2);  // new variable z
    CHECK(h == parse_poly("y^2*z+y*z^2-x^3", 3, F5));
    CHECK(h.is_homogeneous());
    CHECK(dehomogenize(h, 2) == f);
    CHECK_THROWS_AS(dehomogenize(parse_poly("x^2+y", 2, F5), 1), NotHomogeneous);

    SplitRng rng(3);
    for (int i = 0; i < 50; ++i) {
        MultiPoly g = random_poly(F5, 2, 4, rng);
        if (g.is_zero()) continue;
        MultiPoly hg = homogenize(g, 2);
        CHECK(hg.is_homogeneous());
        CHECK(*hg.total_degree() == *g.total_degree());
        CHECK(dehomogenize(hg, 2) == g);
    }
}

TEST_CASE("coefficient transport along embeddings") {
    auto F2 = Field::make(2, 1), F4 = Field::make(2, 2);
    Embedding e = embed(F2, F4);
    MultiPoly f = parse_poly("y^2+y+x^3", 2, F2);
    MultiPoly g = map_coefficients(f, e);
    CHECK(g.field() == F4);
    CHECK(g == parse_poly("y^2+y+x^3", 2, F4));

    // evaluation commutes with the embedding
    SplitRng rng(17);
    for (int i = 0; i < 100; ++i) {
        auto pt = random_point(F2, 2, rng);
        std::vector<Elem> ept{e.apply_raw(pt[0]), e.apply_raw(pt[1])};
        CHECK(e.apply_raw(f.evaluate(pt)) == g.evaluate(ept));
    }

    Embedding id = embed(F4, F4);
    MultiPoly h = parse_poly("(t+1)*x*y+1", 2, F4);
    CHECK(map_coefficients(h, id) == h);
}

TEST_CASE("hypersurface constructors validate their input") {
    auto F3 = Field::make(3, 1);
    CHECK_THROWS_AS(Hypersurface::affine(2, MultiPoly::constant(F3, 2, 1)), Error);
    CHECK_THROWS_AS(Hypersurface::projective(2, parse_poly("x^2+y", 3, F3)), NotHomogeneous);
    Hypersurface X = Hypersurface::projective(2, parse_poly("y^2*z+y*z^2-x^3", 3, F3));
    CHECK(X.degree == 3);
}

TEST_CASE("restriction to a coordinate plane is coordinate restriction") {
    auto F4 = Field::make(2, 2);
    Hypersurface X = Hypersurface::affine(3, parse_poly("y^2+y+x^3", 3, F4));
    PlaneFrame H;
    H.setting = Setting::affine;
    H.n = 3;
    H.rows = {{F4->one(), 0, 0}, {0, F4->one(), 0}};  // the (x, y)-plane
    H.base = {0, 0, 0};
    H = canonicalize(H, *F4);
    MultiPoly r = restrict_to_plane(X, H);
    CHECK(r == parse_poly("y^2+y+x^3", 2, F4));
}

TEST_CASE("a plane inside the hypersurface restricts to zero") {
    auto F3 = Field::make(3, 1);
    Hypersurface X = Hypersurface::affine(3, parse_poly("x", 3, F3));
    PlaneFrame H;
    H.setting = Setting::affine;
    H.n = 3;
    H.rows = {{0, F3->one(), 0}, {0, 0, F3->one()}};  // {x = 0}
    H.base = {0, 0, 0};
    H = canonicalize(H, *F3);
    CHECK(restrict_to_plane(X, H).is_zero());
}

TEST_CASE("restriction agrees with pointwise substitution on random planes") {
    auto F5 = Field::make(5, 1);
    SplitRng rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        MultiPoly f = random_poly(F5, 3, 3, rng);
        if (f.is_zero() || *f.total_degree() < 1) continue;
        Hypersurface X = Hypersurface::affine(3, f);
        PlaneFrame H = sample_plane(3, F5, Setting::affine, rng);
        MultiPoly r = restrict_to_plane(X, H);
        if (!r.is_zero()) CHECK(*r.total_degree() <= *f.total_degree());
        for (int i = 0; i < 100; ++i) {
            Elem s = static_cast<Elem>(rng.next_below(5)), w = static_cast<Elem>(rng.next_below(5));
            std::vector<Elem> pt(3);
            for (int j = 0; j < 3; ++j)
                pt[j] = F5->add(H.base[j],
                                F5->add(F5->mul(s, H.rows[0][j]), F5->mul(w, H.rows[1][j])));
            CHECK(r.evaluate(std::vector<Elem>{s, w}) == f.evaluate(pt));
        }
    }
}

TEST_CASE("restriction degree is d for most planes") {
    auto F4 = Field::make(2, 2);
    Hypersurface X = Hypersurface::affine(3, parse_poly("y^2+y+x^3", 3, F4));
    auto planes = enumerate_planes(3, F4, Setting::affine);
    int full = 0;
    for (const auto& H : planes) {
        MultiPoly r = restrict_to_plane(X, H);
        if (!r.is_zero() && *r.total_degree() == X.degree) ++full;
    }
    CHECK(full * 10 >= static_cast<int>(planes.size()) * 9);  // >= 90%
}

TEST_CASE("cross-field and cross-arity arithmetic is rejected") {
    auto F3 = Field::make(3, 1);
    auto F5 = Field::make(5, 1);
    MultiPoly a = parse_poly("x+y", 2, F3);
    CHECK_THROWS_AS(a + parse_poly("x+y", 2, F5), MixedFields);
    CHECK_THROWS_AS(a + parse_poly("x", 1, F3), ArityMismatch);
    CHECK_THROWS_AS(a.evaluate(std::vector<Elem>{1}), ArityMismatch);
}
