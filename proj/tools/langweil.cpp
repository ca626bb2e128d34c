#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "langweil/components.hpp"
#include "langweil/counting.hpp"
#include "langweil/errors.hpp"
#include "langweil/gf.hpp"
#include "langweil/ledger.hpp"
#include "langweil/mpoly.hpp"
#include "langweil/refine.hpp"
#include "langweil/slicing.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    int n = 2;
    std::uint64_t seed = 0;
    std::string output = "json";
    std::uint64_t work_cap = 1'000'000'000ULL;
};

void render_table(const json& j, std::ostream& out, const std::string& prefix = "") {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            if (v.is_structured())
                render_table(v, out, key);
            else
                out << key << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            render_table(j[i], out, prefix + "[" + std::to_string(i) + "]");
    } else {
        out << prefix << " = " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const GlobalOpts& g, json j) {
    j["schema"] = 1;
    if (g.output == "table")
        render_table(j, std::cout);
    else
        std::cout << j.dump(2) << "\n";
}

json count_json(const lw::CountResult& r) {
    return {{"count", r.count.get_str()},
            {"q", r.q},
            {"n", r.n},
            {"setting", lw::setting_name(r.setting)},
            {"method", r.method},
            {"elapsed_ms", r.elapsed_ms}};
}

// x^a y^b (z^c) over the first variables of an nvars-variable ring.
lw::MultiPoly mono(const lw::FieldPtr& field, int nvars, std::vector<std::uint32_t> exps) {
    exps.resize(nvars, 0);
    lw::MultiPoly f(field, nvars);
    f.add_term(exps, 1);
    return f;
}

struct CliExit {
    int code;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Point counts, slice statistics, and certified Lang-Weil-type bounds "
                 "for hypersurfaces over finite fields"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--p", g.p, "field characteristic (prime)")->capture_default_str();
    app.add_option("--m", g.m, "extension degree over the prime field")->capture_default_str();
    app.add_option("--n", g.n, "ambient dimension")->capture_default_str();
    app.add_option("--seed", g.seed, "random seed for sampling commands")->capture_default_str();
    app.add_option("--output", g.output, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_option("--work-cap", g.work_cap, "operation cap for exhaustive counting")
        ->capture_default_str();

    std::string poly_text;
    int d = 3, rmax = 1, dmax = 1000;
    std::uint64_t q_probe = 0, samples = 10'000, cutoff = 100'000;
    int workers = 4;
    bool projective = false, schwartz_zippel = false, exact_sums = false;
    std::string N_text;
    std::string force_mode = "auto";

    auto* c_count = app.add_subcommand("count", "exact number of points of an affine hypersurface");
    c_count->add_option("--poly", poly_text, "defining polynomial in x1..xn (aliases x,y,z,w)")
        ->required();
    bool brute = false;
    c_count->add_flag("--brute", brute, "exhaustive evaluation instead of the fiberwise scan");

    auto* c_proj = app.add_subcommand("count-projective",
                                      "exact number of points of a projective hypersurface");
    c_proj->add_option("--poly", poly_text, "homogeneous polynomial in x1..x(n+1)")->required();

    auto* c_comp = app.add_subcommand(
        "components", "factor a plane curve and count absolutely irreducible components");
    c_comp->add_option("--poly", poly_text, "bivariate polynomial in x, y")->required();

    auto* c_slice =
        app.add_subcommand("slice", "distribution of plane-slice counts with interval bins");
    c_slice->add_option("--poly", poly_text, "defining polynomial")->required();
    c_slice->add_flag("--projective", projective, "treat the input as a projective hypersurface");
    c_slice->add_flag("--schwartz-zippel", schwartz_zippel, "cap the top interval at d*q");
    c_slice->add_option("--samples", samples, "Monte Carlo sample count")->capture_default_str();
    c_slice->add_option("--cutoff", cutoff, "largest plane census swept exhaustively")
        ->capture_default_str();
    c_slice->add_option("--workers", workers, "worker threads")->capture_default_str();
    c_slice->add_option("--mode", force_mode, "auto | exhaustive | monte-carlo")
        ->check(CLI::IsMember({"auto", "exhaustive", "monte-carlo"}))
        ->capture_default_str();

    auto* c_int = app.add_subcommand("intervals", "slice-count interval system for (q, d)");
    c_int->add_option("--d", d, "hypersurface degree")->required();
    c_int->add_flag("--projective", projective, "projective variant");
    c_int->add_flag("--schwartz-zippel", schwartz_zippel, "cap the top interval at d*q");

    auto* c_bounds =
        app.add_subcommand("check-bounds", "evaluate every explicit bound for a given count");
    c_bounds->add_option("--N", N_text, "observed point count")->required();
    c_bounds->add_option("--d", d, "hypersurface degree")->required();
    c_bounds->add_flag("--projective", projective, "projective setting");

    auto* c_thr = app.add_subcommand("thresholds", "degree thresholds for the explicit bounds");
    c_thr->add_option("--d", d, "hypersurface degree")->required();
    c_thr->add_option("--q", q_probe, "optional q to test against the thresholds");

    auto* c_ver = app.add_subcommand("verify-constants",
                                     "certify the numeric inequalities behind the explicit bounds");
    c_ver->add_option("--dmax", dmax, "verify for all degrees 2..dmax")->capture_default_str();

    auto* c_ref = app.add_subcommand("refine", "refined asymptotic coefficients C^(j), D^(j)");
    c_ref->add_option("--d", d, "hypersurface degree")->required();
    c_ref->add_option("--rmax", rmax, "largest integer order r of the table")
        ->capture_default_str();
    c_ref->add_flag("--exact-sums", exact_sums,
                    "keep the finite k-sums instead of the pi^2/6 relaxation");

    auto* c_exa = app.add_subcommand(
        "examples", "counts and bound reports for the three built-in maximal-curve families");
    c_exa->add_option("--d", d, "curve degree (d-1 should be a prime power)")
        ->capture_default_str();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    try {
        lw::FieldPtr field = lw::Field::make(g.p, g.m);
        lw::CountOptions copts;
        copts.work_cap = g.work_cap;
        copts.workers = workers;

        if (*c_count) {
            lw::MultiPoly f = lw::parse_poly(poly_text, g.n, field);
            lw::Hypersurface X = lw::Hypersurface::affine(g.n, std::move(f));
            lw::CountResult r =
                brute ? lw::count_affine_brute(X, copts) : lw::count_affine(X, copts);
            json j = count_json(r);
            j["command"] = "count";
            emit(g, j);
        } else if (*c_proj) {
            lw::MultiPoly f = lw::parse_poly(poly_text, g.n + 1, field);
            lw::Hypersurface X = lw::Hypersurface::projective(g.n, std::move(f));
            json j = count_json(lw::count_projective(X, copts));
            j["command"] = "count-projective";
            emit(g, j);
        } else if (*c_comp) {
            lw::MultiPoly f = lw::parse_poly(poly_text, 2, field);
            json j = lw::component_report_json(lw::component_count(f, copts));
            j["command"] = "components";
            j["q"] = field->q();
            emit(g, j);
        } else if (*c_slice) {
            lw::Setting setting = projective ? lw::Setting::projective : lw::Setting::affine;
            lw::MultiPoly f =
                lw::parse_poly(poly_text, projective ? g.n + 1 : g.n, field);
            lw::Hypersurface X = projective ? lw::Hypersurface::projective(g.n, std::move(f))
                                            : lw::Hypersurface::affine(g.n, std::move(f));
            lw::IntervalSystem sys =
                lw::interval_system(field->q(), X.degree, setting, schwartz_zippel);
            lw::SliceOptions sopts;
            sopts.exhaustive_cutoff = cutoff;
            sopts.samples = samples;
            sopts.seed = g.seed;
            sopts.workers = workers;
            sopts.count = copts;
            if (force_mode != "auto") sopts.force_exhaustive = (force_mode == "exhaustive");
            json j = lw::slice_report_json(lw::slice_distribution(X, sys, sopts));
            j["command"] = "slice";
            j["q"] = field->q();
            j["d"] = X.degree;
            j["n"] = g.n;
            j["setting"] = lw::setting_name(setting);
            emit(g, j);
        } else if (*c_int) {
            lw::Setting setting = projective ? lw::Setting::projective : lw::Setting::affine;
            lw::IntervalSystem sys = lw::interval_system(field->q(), d, setting, schwartz_zippel);
            json rows = json::array();
            for (int k = 0; k <= d; ++k)
                rows.push_back({{"k", k},
                                {"a", sys.a[k].str()},
                                {"a_approx", sys.a[k].to_double()},
                                {"b", sys.b[k].str()},
                                {"b_approx", sys.b[k].to_double()}});
            emit(g, {{"command", "intervals"},
                     {"q", sys.q},
                     {"d", sys.d},
                     {"setting", lw::setting_name(setting)},
                     {"schwartz_zippel", sys.schwartz_zippel},
                     {"intervals", rows},
                     {"infinity", sys.infinity_point.str()},
                     {"disjoint", sys.intervals_disjoint()},
                     {"j_disjoint", sys.j_disjoint()}});
        } else if (*c_bounds) {
            lw::Setting setting = projective ? lw::Setting::projective : lw::Setting::affine;
            lw::BoundReport r = lw::bound_report(lw::Int(N_text), field->q(), d, g.n, setting);
            json j = lw::bound_report_json(r);
            j["command"] = "check-bounds";
            emit(g, j);
            for (const auto& e : r.entries)
                if (e.applicable && e.satisfied && !*e.satisfied) return 1;
        } else if (*c_thr) {
            lw::ThresholdSet t = lw::thresholds(d);
            json j{{"command", "thresholds"},
                   {"d", t.d},
                   {"cm_threshold_cubed", t.cm_threshold_cubed.get_str()},
                   {"zone_root_sq", t.zone_root_sq.str()},
                   {"zone_root_sq_approx", t.zone_root_sq.to_double()}};
            if (q_probe) {
                j["q"] = q_probe;
                j["q_above_cm"] = t.q_above_cm(q_probe);
                j["q_in_zone"] = t.q_in_zone(q_probe);
                j["disjointness_inequality"] = t.disjointness_inequality(q_probe);
            }
            emit(g, j);
        } else if (*c_ver) {
            lw::ConstantsReport r = lw::verify_proof_constants(dmax);
            json j = lw::constants_report_json(r);
            j["command"] = "verify-constants";
            emit(g, j);
            if (!r.all_pass) return 1;
        } else if (*c_ref) {
            lw::RefinementTable t = lw::iterate(2 * rmax, d, !exact_sums);
            json j = lw::refinement_table_json(t);
            j["command"] = "refine";
            emit(g, j);
        } else if (*c_exa) {
            if (d < 3) throw lw::Error("example families need degree >= 3");
            int n = std::max(g.n, 2);
            auto ud = static_cast<std::uint32_t>(d);
            // Cylinder over the maximal curve y^{d-1} + y = x^d.
            lw::MultiPoly herm = mono(field, n, {ud}) - mono(field, n, {0, ud - 1}) -
                                 mono(field, n, {0, 1});
            // Cylinder over the low-count curve y^{d-1} z + y z^{d-1} = 1 (z = x here).
            lw::MultiPoly low = mono(field, n, {1, ud - 1}) + mono(field, n, {ud - 1, 1}) -
                                lw::MultiPoly::constant(field, n, 1);
            // Cone in P^n over the projective closure y^{d-1} z + y z^{d-1} = x^d.
            lw::MultiPoly cone = mono(field, n + 1, {0, ud - 1, 1}) +
                                 mono(field, n + 1, {0, 1, ud - 1}) - mono(field, n + 1, {ud});
            json fams = json::array();
            auto add = [&](const char* name, lw::Hypersurface X) {
                lw::CountResult r = X.setting == lw::Setting::affine
                                        ? lw::count_affine(X, copts)
                                        : lw::count_projective(X, copts);
                json f = count_json(r);
                f["name"] = name;
                f["poly"] = X.f.str();
                f["d"] = X.degree;
                f["bounds"] = lw::bound_report_json(
                    lw::bound_report(r.count, field->q(), X.degree, X.ambient_dim, X.setting));
                fams.push_back(std::move(f));
            };
            add("maximal_cylinder", lw::Hypersurface::affine(n, std::move(herm)));
            add("low_count_cylinder", lw::Hypersurface::affine(n, std::move(low)));
            add("maximal_cone", lw::Hypersurface::projective(n, std::move(cone)));
            emit(g, {{"command", "examples"}, {"d", d}, {"q", field->q()}, {"n", n},
                     {"families", fams}});
        }
    } catch (const lw::WorkCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const lw::OrderTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const lw::DegreeCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const lw::OrderCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const lw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
