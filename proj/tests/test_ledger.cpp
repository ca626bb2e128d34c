#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "langweil/ledger.hpp"

using namespace lw;

TEST_CASE("interval endpoints at q = 49, d = 3") {
    IntervalSystem sys = interval_system(49, 3, Setting::affine);
    CHECK(sys.a[1] == SqrtExt::rational(33));  // 49 - 2*7 - 2
    CHECK(sys.b[1] == SqrtExt::rational(64));  // 49 + 2*7 + 1
    CHECK(sys.a[0] == SqrtExt::rational(0));
    CHECK(sys.b[0] == SqrtExt::rational(make_rat(9, 4)));
    CHECK(sys.a[2] == SqrtExt::rational(71));   // 98 - 14 - 13
    CHECK(sys.b[2] == SqrtExt::rational(125));  // 98 + 14 + 13
    CHECK(sys.infinity_point == SqrtExt::rational(49 * 49));
}

TEST_CASE("b_0 = d^2/4 and the degenerate degree-2 case") {
    CHECK(interval_system(9, 2, Setting::affine).b[0] == SqrtExt::rational(1));
    IntervalSystem sys = interval_system(11, 2, Setting::affine);
    CHECK(sys.a[2] == SqrtExt::rational(2 * 11 - 7));
    CHECK(sys.b[2] == SqrtExt::rational(2 * 11 + 7));
}

TEST_CASE("non-square q keeps the radical symbolic") {
    IntervalSystem sys = interval_system(7, 3, Setting::affine);
    CHECK(sys.a[1] == SqrtExt(Rat(7 - 2), Rat(-2), Int(7)));
    CHECK(sys.a[1].radicand() == 7);
}

TEST_CASE("projective variant: a_1, widened b_k, and the infinity point") {
    IntervalSystem a = interval_system(49, 3, Setting::affine);
    IntervalSystem p = interval_system(49, 3, Setting::projective);
    CHECK(p.a[1] == SqrtExt::rational(36));  // q - (d-1)(d-2)sqrt(q) + 1
    CHECK(p.b[1] == a.b[1]);
    for (int k = 2; k <= 3; ++k) {
        CHECK(p.a[k] == a.a[k]);
        CHECK(p.b[k] == a.b[k] + SqrtExt::rational(3));
    }
    CHECK(p.infinity_point == SqrtExt::rational(49 * 49 + 49 + 1));
}

TEST_CASE("Schwartz-Zippel flag replaces the top endpoint by d*q") {
    IntervalSystem sys = interval_system(49, 3, Setting::affine, true);
    CHECK(sys.schwartz_zippel);
    CHECK(sys.b[3] == SqrtExt::rational(3 * 49));
    CHECK(interval_system(49, 3, Setting::affine).b[3] == SqrtExt::rational(174));
}

TEST_CASE("classification of counts") {
    IntervalSystem sys = interval_system(49, 3, Setting::affine);
    CHECK(classify_count(Rat(49 * 49), sys) == SliceBin{BinKind::infinity, -1});
    CHECK(classify_count(Rat(50), sys) == SliceBin{BinKind::finite, 1});
    CHECK(classify_count(Rat(20), sys) == SliceBin{BinKind::out_of_interval, -1});
    CHECK(classify_count(Rat(0), sys) == SliceBin{BinKind::finite, 0});
    // 122 lies in both I_2 = [71, 125] and I_3 = [120, 174]: ambiguous
    CHECK(!sys.intervals_disjoint());
    CHECK_THROWS_AS(classify_count(Rat(122), sys), IntervalOverlap);
    // the union scan resolves it to the first matching bin
    CHECK(classify_count_union(Rat(122), sys) == SliceBin{BinKind::finite, 2});
}

TEST_CASE("intervals become disjoint for large q") {
    // d = 3: disjointness needs 4(d-1)(d-2)sqrt(q) + 2(d^2+d+13) < q
    CHECK(!interval_system(49, 3, Setting::affine).intervals_disjoint());
    CHECK(interval_system(169, 3, Setting::affine).intervals_disjoint());
    CHECK(interval_system(169, 3, Setting::affine).j_disjoint());
    ThresholdSet t = thresholds(3);
    CHECK(!t.disjointness_inequality(49));
    CHECK(t.disjointness_inequality(169));
}

TEST_CASE("J_1 merges I_0 and I_1") {
    // q = 41, d = 2: I_0 = [0, 1] and I_1 = [40, 42] overlap nothing between
    IntervalSystem sys = interval_system(41, 2, Setting::affine);
    CHECK(sys.intervals_disjoint());
    CHECK(sys.j_disjoint());
}

TEST_CASE("bound report: explicit upper bound at d = 2, n = 2, q = 307") {
    BoundReport r = bound_report(Int(307), 307, 2, 2, Setting::affine);
    bool found = false;
    for (const auto& e : r.entries) {
        if (e.name == "upper_explicit") {
            found = true;
            CHECK(e.applicable);  // 307 > 15 * 2^{13/3} ~ 100.8
            CHECK(e.rhs == "312");
            CHECK(e.satisfied.has_value());
            CHECK(*e.satisfied);
        }
        if (e.name == "ghorpade_lachaud") {
            CHECK(e.rhs == "1500");  // C_d = 12 (d+3)^{n+1} = 12 * 125
            CHECK(*e.satisfied);
        }
        if (e.name == "lower_explicit") {
            CHECK(e.rhs == "1522/5");  // q - (d + 3/5)
            CHECK(*e.satisfied);
        }
    }
    CHECK(found);
}

TEST_CASE("bound report: Aubry-Perret on plane curves only") {
    BoundReport plane = bound_report(Int(8), 4, 3, 2, Setting::affine);
    BoundReport solid = bound_report(Int(32), 4, 3, 3, Setting::affine);
    auto find = [](const BoundReport& r, const std::string& name) {
        for (const auto& e : r.entries)
            if (e.name == name) return e;
        return BoundEntry{};
    };
    CHECK(find(plane, "aubry_perret_upper").applicable);
    CHECK(*find(plane, "aubry_perret_upper").satisfied);  // 8 <= 4 + 2*2 + 1
    CHECK(*find(plane, "aubry_perret_lower").satisfied);
    CHECK(!find(solid, "aubry_perret_upper").applicable);
}

TEST_CASE("bound report: asymptotic entries are never verdicts") {
    BoundReport r = bound_report(Int(307), 307, 2, 2, Setting::affine);
    int na = 0;
    for (const auto& e : r.entries)
        if (!e.applicable && !e.satisfied.has_value()) {
            ++na;
            CHECK(e.note.find("refinement") != std::string::npos);
        }
    CHECK(na == 3);
}

TEST_CASE("forbidden interval is nonempty exactly in the zone regime") {
    // d = 2, n = 2, q = 41: hypothesis RHS 1.5q - 7 = 54.5 exceeds
    // conclusion RHS q + 12 = 53, so the interval (53, 54.5] is forbidden.
    SqrtExt rhs5 = SqrtExt::rational(make_rat(3 * 41, 2) - 7);
    SqrtExt rhs6 = SqrtExt::rational(41 + 12);
    CHECK(rhs5 > rhs6);
    BoundReport in = bound_report(Int(54), 41, 2, 2, Setting::affine);
    for (const auto& e : in.entries)
        if (e.name == "forbidden_interval") {
            CHECK(e.applicable);  // q = 41 > r(2)^2 = 38
            CHECK(!*e.satisfied);  // 54 falls inside the forbidden gap
        }
    BoundReport out = bound_report(Int(53), 41, 2, 2, Setting::affine);
    for (const auto& e : out.entries)
        if (e.name == "forbidden_interval") CHECK(*e.satisfied);
}

TEST_CASE("thresholds") {
    ThresholdSet t2 = thresholds(2);
    CHECK(t2.zone_root_sq == SqrtExt::rational(38));  // r(2)^2 = 38
    CHECK(t2.cm_threshold_cubed == Int(3375) * 8192); // 15^3 * 2^13
    CHECK(t2.q_above_cm(303));                        // 15 * 2^{13/3} > 302
    CHECK(!t2.q_above_cm(302));
    CHECK(t2.q_in_zone(41));
    CHECK(!t2.q_in_zone(38));
    CHECK(t2.disjointness_inequality(41));  // 4*0 + 2*19 = 38 < 41
    CHECK(!t2.disjointness_inequality(38));
}

TEST_CASE("proof-constant verifier passes and reports witnesses on failure") {
    ConstantsReport r = verify_proof_constants(500);
    CHECK(r.all_pass);
    CHECK(r.checks.size() == 15);
    for (const auto& c : r.checks) {
        CHECK(c.pass);
        CHECK(!c.witness_d.has_value());
    }
    auto j = constants_report_json(r);
    CHECK(j["all_pass"] == true);
    CHECK(j["checks"].size() == 15);
}

TEST_CASE("named proof constants are present") {
    ConstantsReport r = verify_proof_constants(10);
    auto has = [&](const std::string& name) {
        for (const auto& c : r.checks)
            if (c.name == name) return true;
        return false;
    };
    CHECK(has("variance_ratio_g"));
    CHECK(has("chebyshev_constant_212"));
    CHECK(has("zone_root_d2"));
    CHECK(has("abel_width_zone"));
    CHECK(has("p_infinity_zone"));
    CHECK(has("final_lower_identity"));
}
