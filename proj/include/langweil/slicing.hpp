#pragma once

#include <json.hpp>

#include <map>

#include "langweil/counting.hpp"
#include "langweil/ledger.hpp"
#include "langweil/plane.hpp"

namespace lw {

/// Exact q-binomial coefficient: prod_{i<k} (q^{n-i}-1)/(q^{k-i}-1).
Int gaussian_binomial(int n, int k, std::uint64_t q);

/// (rho1, rho2): the probability that a uniform plane in P^n passes through
/// one given point, respectively through two given distinct points.
/// rho1 = (q^3-1)/(q^{n+1}-1), rho2 = qbinom(n-1,1)/qbinom(n+1,3).
std::pair<Rat, Rat> projective_incidence(int n, std::uint64_t q);

struct SliceOptions {
    /// Exhaustive when the plane census is at most this; Monte Carlo above.
    std::uint64_t exhaustive_cutoff = 100'000;
    /// Force a mode regardless of the census (exhaustive may still hit the cap).
    std::optional<bool> force_exhaustive;
    std::uint64_t samples = 10'000;
    std::uint64_t seed = 0;
    int workers = 4;  // deterministic partitioning / per-worker RNG splits
    std::uint64_t enumeration_cap = 10'000'000;
    CountOptions count;  // per-slice counting limits
};

/// Distribution of #(X ∩ H)(F_q) over planes H, either exhaustively or by
/// seeded Monte Carlo, with interval-bin occupancy.
struct SliceReport {
    bool exhaustive = true;
    std::uint64_t planes = 0;   // planes inspected
    std::uint64_t samples = 0;  // MC only
    std::uint64_t seed = 0;     // MC only
    std::map<int, std::uint64_t> histogram;  // k -> occurrences
    std::uint64_t infinity_hits = 0;
    std::uint64_t out_of_interval = 0;
    bool intervals_disjoint = false;  // pairwise disjointness of I_0..I_d, I_inf
    Rat mean, variance;          // exact (exhaustive mode)
    double mean_mc = 0, variance_mc = 0;  // MC mode
    /// Exact expected mean: N/q^{n-2} (affine) or N*rho1 (projective).
    Rat expected_mean;
    Int N;  // |X(F_q)|, counted once for the cross-check
};

SliceReport slice_distribution(const Hypersurface& X, const IntervalSystem& intervals,
                               const SliceOptions& opts = {});

/// #(X ∩ H)(F_q) for a single plane in canonical form.
Int slice_count(const Hypersurface& X, const PlaneFrame& H, const CountOptions& opts = {});

nlohmann::json slice_report_json(const SliceReport& r);

}  // namespace lw
