#pragma once

#include <json.hpp>

#include <optional>
#include <vector>

#include "langweil/exact.hpp"
#include "langweil/mpoly.hpp"

namespace lw {

/// The slice-count interval system: I_k = [a_k, b_k] for k in 0..d plus the
/// singleton I_infinity.  Affine endpoints:
///   a_0 = 0, b_0 = d^2/4,
///   a_1 = q - (d-1)(d-2)sqrt(q) - d + 1, b_1 = q + (d-1)(d-2)sqrt(q) + 1,
///   a_k = kq - (d-1)(d-2)sqrt(q) - d^2 - d - 1,
///   b_k = kq + (d-1)(d-2)sqrt(q) + d^2 + d + 1  (2 <= k <= d),
///   I_infinity = {q^2}.
/// Projective variant: a_1 gains +1 instead of -d+1, I_infinity = {q^2+q+1},
/// and each b_k with k >= 2 is widened by d to absorb points at infinity.
/// Optional Schwartz–Zippel flag replaces b_d by d*q.
struct IntervalSystem {
    std::uint64_t q = 0;
    int d = 0;
    Setting setting = Setting::affine;
    bool schwartz_zippel = false;
    std::vector<SqrtExt> a, b;  // index k in 0..d
    SqrtExt infinity_point;     // a_inf = b_inf

    bool contains(int k, const Rat& c) const;
    /// I_0, ..., I_d, I_inf pairwise disjoint.
    bool intervals_disjoint() const;
    /// J_1 = I_0 ∪ I_1, J_k = I_k (k >= 2), J_inf pairwise disjoint.
    bool j_disjoint() const;
};

IntervalSystem interval_system(std::uint64_t q, int d, Setting setting,
                               bool schwartz_zippel = false);

enum class BinKind { finite, infinity, out_of_interval };

struct SliceBin {
    BinKind kind = BinKind::out_of_interval;
    int k = -1;  // meaningful only for BinKind::finite

    bool operator==(const SliceBin&) const = default;
};

/// Unique bin containing c; requires a pairwise disjoint system (else
/// IntervalOverlap).
SliceBin classify_count(const Rat& c, const IntervalSystem& sys);

/// Union-membership scan: the first bin containing c in the order
/// I_0, ..., I_d, I_inf.  Well-defined even when intervals overlap; used by
/// the slicing sweep, which only needs membership in the union.
SliceBin classify_count_union(const Rat& c, const IntervalSystem& sys);

/// One evaluated bound.  Bounds carrying unspecified O_d-constants are listed
/// with applicable = false and a pointer to the refinement series.
struct BoundEntry {
    std::string name;
    std::string condition;  // human-readable applicability requirement
    bool applicable = false;
    std::string rhs;        // exact symbolic right-hand side (display)
    double rhs_approx = 0;  // display only; never used in verdicts
    std::optional<bool> satisfied;  // nullopt when not applicable
    std::string note;
};

struct BoundReport {
    Int N;
    std::uint64_t q = 0;
    int d = 0, n = 0;
    Setting setting = Setting::affine;
    std::vector<BoundEntry> entries;
};

/// Evaluates every explicit bound for the given data.  Entries assuming
/// geometric irreducibility say so in their condition string; the caller is
/// responsible for supplying N of a geometrically irreducible hypersurface
/// when interpreting those verdicts.
BoundReport bound_report(const Int& N, std::uint64_t q, int d, int n, Setting setting);

nlohmann::json bound_report_json(const BoundReport& r);

/// Threshold quantities for degree d: the Cafure–Matera regime q > 15 d^{13/3}
/// (decided exactly by cube clearing: q^3 > 3375 d^13) and the zone root
/// r(d), the positive solution of x^2 - 4(d-1)(d-2)x - 2(d^2+d+13) = 0,
/// entering as q > r(d)^2.
struct ThresholdSet {
    int d = 0;
    Int cm_threshold_cubed;  // 3375 * d^13
    SqrtExt zone_root_sq;    // r(d)^2, exact

    bool q_above_cm(std::uint64_t q) const;
    bool q_in_zone(std::uint64_t q) const;
    /// 4(d-1)(d-2)sqrt(q) + 2(d^2+d+13) < q (equivalent to q > r(d)^2).
    bool disjointness_inequality(std::uint64_t q) const;
};

ThresholdSet thresholds(int d);

struct ConstantCheck {
    std::string name;
    bool pass = false;
    std::string detail;
    std::optional<long> witness_d;  // first failing d, when the sweep fails
};

struct ConstantsReport {
    int d_max = 0;
    std::vector<ConstantCheck> checks;
    bool all_pass = false;
};

/// Certifies every numeric inequality used by the explicit-constant proofs
/// (variance ratios, Chebyshev constants, tail probabilities, interval-width
/// and final-sum estimates) for all integer d in [2, d_max], by exact
/// rational arithmetic, exact a+b*sqrt(q) comparisons, and certified interval
/// enclosures for the fractional powers d^{13/3}, d^{13/6}.  Sweeps are
/// complemented by monotone-tail certificates where the argument is "check a
/// base point, then use monotonicity".
ConstantsReport verify_proof_constants(int d_max);

nlohmann::json constants_report_json(const ConstantsReport& r);

}  // namespace lw
