#include "langweil/slicing.hpp"

#include <algorithm>
#include <thread>

namespace lw {

Int gaussian_binomial(int n, int k, std::uint64_t q) {
    if (k < 0 || k > n) throw Error("gaussian binomial needs 0 <= k <= n");
    Int num = 1, den = 1, qz(static_cast<unsigned long>(q));
    for (int i = 0; i < k; ++i) {
        num *= int_pow(qz, n - i) - 1;
        den *= int_pow(qz, k - i) - 1;
    }
    return num / den;
}

std::pair<Rat, Rat> projective_incidence(int n, std::uint64_t q) {
    if (n < 2) throw DimensionMismatch("projective incidence needs n >= 2");
    Int qz(static_cast<unsigned long>(q));
    Rat rho1 = make_rat(int_pow(qz, 3) - 1, int_pow(qz, n + 1) - 1);
    Rat rho2 = make_rat(gaussian_binomial(n - 1, 1, q), gaussian_binomial(n + 1, 3, q));
    return {rho1, rho2};
}

Int slice_count(const Hypersurface& X, const PlaneFrame& H, const CountOptions& opts) {
    MultiPoly r = restrict_to_plane(X, H);
    std::uint64_t q = X.f.field()->q();
    if (X.setting == Setting::affine) return count_affine_zeros(r, opts);
    if (r.is_zero()) {
        Int qz(static_cast<unsigned long>(q));
        return qz * qz + qz + 1;  // H ⊆ X: all of P^2
    }
    return count_projective(Hypersurface::projective(2, std::move(r)), opts).count;
}

namespace {

struct Accum {
    std::map<int, std::uint64_t> hist;
    std::uint64_t inf_hits = 0, out_hits = 0, planes = 0;
    Rat sum = 0, sumsq = 0;

    void add(const Int& c, const IntervalSystem& sys) {
        Rat cr(c);
        SliceBin bin = classify_count_union(cr, sys);
        switch (bin.kind) {
            case BinKind::finite: ++hist[bin.k]; break;
            case BinKind::infinity: ++inf_hits; break;
            case BinKind::out_of_interval: ++out_hits; break;
        }
        sum += cr;
        sumsq += cr * cr;
        ++planes;
    }

    void merge(const Accum& o) {
        for (const auto& [k, v] : o.hist) hist[k] += v;
        inf_hits += o.inf_hits;
        out_hits += o.out_hits;
        planes += o.planes;
        sum += o.sum;
        sumsq += o.sumsq;
    }
};

}  // namespace

SliceReport slice_distribution(const Hypersurface& X, const IntervalSystem& intervals,
                               const SliceOptions& opts) {
    const FieldPtr& field = X.f.field();
    std::uint64_t q = field->q();
    if (intervals.q != q || intervals.d != X.degree || intervals.setting != X.setting)
        throw DimensionMismatch("interval system does not match the hypersurface");
    int n = X.ambient_dim;

    Int census = X.setting == Setting::affine
                     ? int_pow(Int(static_cast<unsigned long>(q)), n - 2) *
                           gaussian_binomial(n, 2, q)
                     : gaussian_binomial(n + 1, 3, q);
    bool exhaustive = opts.force_exhaustive
                          ? *opts.force_exhaustive
                          : census <= Int(static_cast<unsigned long>(opts.exhaustive_cutoff));

    SliceReport rep;
    rep.exhaustive = exhaustive;
    rep.intervals_disjoint = intervals.intervals_disjoint();
    rep.N = X.setting == Setting::affine ? count_affine(X, opts.count).count
                                         : count_projective(X, opts.count).count;
    if (X.setting == Setting::affine) {
        rep.expected_mean = make_rat(rep.N, int_pow(Int(static_cast<unsigned long>(q)), n - 2));
    } else {
        rep.expected_mean = Rat(rep.N) * projective_incidence(n, q).first;
    }

    // Per-plane counting stays single-threaded; parallelism is over planes.
    CountOptions per_plane = opts.count;
    per_plane.workers = 1;
    int workers = std::max(1, opts.workers);
    std::vector<Accum> acc(workers);
    std::vector<std::thread> pool;

    if (exhaustive) {
        auto planes = enumerate_planes(n, field, X.setting, opts.enumeration_cap);
        std::size_t total = planes.size();
        std::size_t chunk = total / workers, extra = total % workers, lo = 0;
        for (int w = 0; w < workers; ++w) {
            std::size_t hi = lo + chunk + (static_cast<std::size_t>(w) < extra ? 1 : 0);
            pool.emplace_back([&, w, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i)
                    acc[w].add(slice_count(X, planes[i], per_plane), intervals);
            });
            lo = hi;
        }
        for (auto& t : pool) t.join();
    } else {
        rep.samples = opts.samples;
        rep.seed = opts.seed;
        SplitRng root(opts.seed);
        std::uint64_t chunk = opts.samples / workers, extra = opts.samples % workers;
        for (int w = 0; w < workers; ++w) {
            std::uint64_t quota = chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
            SplitRng rng = root.split(static_cast<std::uint64_t>(w));
            pool.emplace_back([&, w, quota, rng]() mutable {
                for (std::uint64_t i = 0; i < quota; ++i) {
                    PlaneFrame H = sample_plane(n, field, X.setting, rng);
                    acc[w].add(slice_count(X, H, per_plane), intervals);
                }
            });
        }
        for (auto& t : pool) t.join();
    }

    Accum total;
    for (const auto& a : acc) total.merge(a);
    rep.planes = total.planes;
    rep.histogram = std::move(total.hist);
    rep.infinity_hits = total.inf_hits;
    rep.out_of_interval = total.out_hits;
    if (total.planes) {
        Rat p(static_cast<unsigned long>(total.planes));
        rep.mean = total.sum / p;
        rep.variance = total.sumsq / p - rep.mean * rep.mean;
        rep.mean_mc = to_double(rep.mean);
        rep.variance_mc = to_double(rep.variance);
    }
    return rep;
}

nlohmann::json slice_report_json(const SliceReport& r) {
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [k, v] : r.histogram) hist[std::to_string(k)] = v;
    hist["inf"] = r.infinity_hits;
    hist["out_of_interval"] = r.out_of_interval;
    nlohmann::json j{{"mode", r.exhaustive ? "exhaustive" : "monte_carlo"},
                     {"planes", r.planes},
                     {"histogram", hist},
                     {"intervals_disjoint", r.intervals_disjoint},
                     {"N", r.N.get_str()},
                     {"expected_mean", rat_str(r.expected_mean)},
                     {"mean_approx", r.mean_mc},
                     {"variance_approx", r.variance_mc}};
    if (r.exhaustive) {
        j["mean"] = rat_str(r.mean);
        j["variance"] = rat_str(r.variance);
    } else {
        j["samples"] = r.samples;
        j["seed"] = r.seed;
    }
    return j;
}

}  // namespace lw
