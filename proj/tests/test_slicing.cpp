#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "langweil/slicing.hpp"

using namespace lw;

TEST_CASE("gaussian binomials") {
    CHECK(gaussian_binomial(5, 0, 7) == 1);
    CHECK(gaussian_binomial(3, 2, 3) == 13);
    CHECK(gaussian_binomial(4, 3, 2) == 15);
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            for (std::uint64_t q : {2, 3, 4})
                CHECK(gaussian_binomial(n, k, q) == gaussian_binomial(n, n - k, q));
    CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), Error);
}

TEST_CASE("plane enumeration matches the census formulas") {
    auto F3 = Field::make(3, 1);
    auto planes = enumerate_planes(3, F3, Setting::affine);
    CHECK(planes.size() == 39);  // q^{n-2} * qbinom(n, 2)

    auto F2 = Field::make(2, 1);
    CHECK(enumerate_planes(2, F2, Setting::affine).size() == 1);
    CHECK(enumerate_planes(3, F2, Setting::projective).size() == 15);

    // all distinct, all canonical
    std::set<PlaneFrame> dedup(planes.begin(), planes.end());
    CHECK(dedup.size() == planes.size());
    for (const auto& H : planes) {
        PlaneFrame again = canonicalize(H, *F3);
        CHECK(again == H);
    }
}

TEST_CASE("plane enumeration respects the work cap") {
    auto F16 = Field::make(2, 4);
    CHECK_THROWS_AS(enumerate_planes(4, F16, Setting::affine, 100), WorkCapExceeded);
}

TEST_CASE("sampled planes are canonical and seed-deterministic") {
    auto F3 = Field::make(3, 1);
    SplitRng a(123), b(123);
    for (int i = 0; i < 50; ++i) {
        PlaneFrame H = sample_plane(3, F3, Setting::affine, a);
        CHECK(canonicalize(H, *F3) == H);
        CHECK(sample_plane(3, F3, Setting::affine, b) == H);
    }
}

TEST_CASE("chi-squared uniformity of plane sampling in A^3(F_2)") {
    auto F2 = Field::make(2, 1);
    auto planes = enumerate_planes(3, F2, Setting::affine);
    REQUIRE(planes.size() == 14);
    std::map<PlaneFrame, int> freq;
    SplitRng rng(2024);
    const int samples = 14000;
    for (int i = 0; i < samples; ++i) ++freq[sample_plane(3, F2, Setting::affine, rng)];
    double expected = static_cast<double>(samples) / planes.size();
    double chi2 = 0;
    for (const auto& H : planes) {
        double diff = freq[H] - expected;
        chi2 += diff * diff / expected;
    }
    // df = 13, critical value at significance 0.001
    CHECK(chi2 < 34.53);
    CHECK(freq.size() == planes.size());
}

TEST_CASE("projective incidence probabilities") {
    auto [rho1, rho2] = projective_incidence(3, 2);
    CHECK(rho1 == make_rat(7, 15));
    CHECK(rho2 == make_rat(1, 5));
    for (int n = 2; n <= 6; ++n)
        for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
            auto [r1, r2] = projective_incidence(n, q);
            CHECK(r2 <= r1 * r1);
        }
}

TEST_CASE("rho2 agrees with direct incidence counting in P^3(F_2)") {
    auto F2 = Field::make(2, 1);
    auto planes = enumerate_planes(3, F2, Setting::projective);
    // count planes whose span contains both e1 and e2
    auto contains = [&](const PlaneFrame& H, std::vector<Elem> pt) {
        std::vector<std::vector<Elem>> rows = H.rows;
        rows.push_back(std::move(pt));
        return rref(rows, *F2) == 3;
    };
    int through_both = 0;
    for (const auto& H : planes)
        if (contains(H, {1, 0, 0, 0}) && contains(H, {0, 1, 0, 0})) ++through_both;
    CHECK(make_rat(through_both, static_cast<long>(planes.size())) ==
          projective_incidence(3, 2).second);
}

TEST_CASE("exhaustive sweep of the coordinate hyperplane in A^3(F_3)") {
    auto F3 = Field::make(3, 1);
    Hypersurface X = Hypersurface::affine(3, parse_poly("x", 3, F3));
    SliceReport r = slice_distribution(X, interval_system(3, 1, Setting::affine));
    CHECK(r.exhaustive);
    CHECK(r.planes == 39);
    CHECK(r.N == 9);
    CHECK(r.mean == 3);                 // N / q^{n-2}
    CHECK(r.mean == r.expected_mean);
    CHECK(r.variance <= r.mean);
    CHECK(r.out_of_interval == 0);
    CHECK(r.infinity_hits == 1);        // the plane {x = 0} itself
    CHECK(r.histogram.at(0) == 2);
    CHECK(r.histogram.at(1) == 36);
}

TEST_CASE("exhaustive sweep of the cylinder over F_4") {
    auto F4 = Field::make(2, 2);
    Hypersurface X = Hypersurface::affine(3, parse_poly("y^2+y+x^3", 3, F4));
    SliceReport r = slice_distribution(X, interval_system(4, 3, Setting::affine));
    CHECK(r.planes == 84);
    CHECK(r.N == 32);
    CHECK(r.mean == 8);
    CHECK(r.variance == make_rat(64, 21));
    CHECK(r.variance <= r.mean);
    CHECK(r.out_of_interval == 0);
    CHECK(r.histogram.at(1) == 76);
    CHECK(r.histogram.at(2) == 8);
}

TEST_CASE("Chebyshev tail bound on the cylinder sweep") {
    auto F4 = Field::make(2, 2);
    Hypersurface X = Hypersurface::affine(3, parse_poly("y^2+y+x^3", 3, F4));
    IntervalSystem sys = interval_system(4, 3, Setting::affine);
    SliceReport r = slice_distribution(X, sys);
    // for k >= 2 with a_k > mu: P(count in J_k u ... u J_inf) <= sigma^2/(a_k-mu)^2
    for (int k = 2; k <= sys.d; ++k) {
        SqrtExt gap = sys.a[k] - SqrtExt::rational(r.mean);
        if (gap.sign() <= 0) continue;
        std::uint64_t tail = r.infinity_hits;
        for (int j = k; j <= sys.d; ++j)
            if (r.histogram.count(j)) tail += r.histogram.at(j);
        double lhs = static_cast<double>(tail) / static_cast<double>(r.planes);
        double bound = to_double(r.variance) / (gap.to_double() * gap.to_double());
        CHECK(lhs <= bound + 1e-12);
    }
}

TEST_CASE("projective sweep of a hyperplane in P^3(F_2)") {
    auto F2 = Field::make(2, 1);
    Hypersurface X = Hypersurface::projective(3, parse_poly("x1", 4, F2));
    SliceReport r = slice_distribution(X, interval_system(2, 1, Setting::projective));
    CHECK(r.planes == 15);
    CHECK(r.N == 7);
    CHECK(r.mean == Rat(r.N) * projective_incidence(3, 2).first);
    CHECK(r.mean == make_rat(49, 15));
    CHECK(r.variance <= r.mean);
    CHECK(r.out_of_interval == 0);
    CHECK(r.infinity_hits == 1);  // the plane inside the hyperplane
}

TEST_CASE("mean identity on further fixtures") {
    struct Fixture {
        std::uint64_t p;
        std::uint32_t m;
        const char* poly;
        int d;
    };
    for (const Fixture& fx : {Fixture{2, 1, "y^2+y+x^3", 3}, {3, 1, "x^2+y^2+z^2-1", 2},
                              {5, 1, "x*y-1", 2}}) {
        auto F = Field::make(fx.p, fx.m);
        Hypersurface X = Hypersurface::affine(3, parse_poly(fx.poly, 3, F));
        SliceReport r = slice_distribution(X, interval_system(F->q(), fx.d, Setting::affine));
        CHECK(r.exhaustive);
        CHECK(r.mean * Rat(static_cast<unsigned long>(F->q())) == Rat(r.N));
        CHECK(r.variance <= r.mean);
        CHECK(r.out_of_interval == 0);
    }
}

TEST_CASE("Monte Carlo mode is reproducible and converges") {
    auto F4 = Field::make(2, 2);
    Hypersurface X = Hypersurface::affine(3, parse_poly("y^2+y+x^3", 3, F4));
    IntervalSystem sys = interval_system(4, 3, Setting::affine);

    SliceOptions opts;
    opts.force_exhaustive = false;
    opts.samples = 4000;
    opts.seed = 2718;
    SliceReport a = slice_distribution(X, sys, opts);
    SliceReport b = slice_distribution(X, sys, opts);
    CHECK(!a.exhaustive);
    CHECK(a.histogram == b.histogram);
    CHECK(a.mean == b.mean);
    CHECK(a.planes == 4000);

    // |MC mean - exact mean| <= 4 sigma / sqrt(samples)
    SliceReport exact = slice_distribution(X, sys);
    double sigma = std::sqrt(to_double(exact.variance));
    CHECK(std::abs(a.mean_mc - to_double(exact.mean)) <= 4 * sigma / std::sqrt(4000.0));
}

TEST_CASE("interval system must match the hypersurface") {
    auto F4 = Field::make(2, 2);
    Hypersurface X = Hypersurface::affine(3, parse_poly("y^2+y+x^3", 3, F4));
    CHECK_THROWS_AS(slice_distribution(X, interval_system(5, 3, Setting::affine)),
                    DimensionMismatch);
    CHECK_THROWS_AS(slice_distribution(X, interval_system(4, 2, Setting::affine)),
                    DimensionMismatch);
}
