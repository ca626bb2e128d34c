#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "langweil/mpoly.hpp"

namespace lw {

/// Exact point count together with the context it was computed in.
struct CountResult {
    mpz_class count;
    std::uint64_t q = 0;
    int n = 0;
    Setting setting = Setting::affine;
    std::string method;  // brute | fiberwise | fiberwise_gcd
    std::int64_t elapsed_ms = 0;
};

struct CountOptions {
    /// Upper bound on fiber-element operations before the request is refused.
    std::uint64_t work_cap = 1'000'000'000ULL;
    /// Fixed worker count; partitioning is deterministic, so the count is
    /// identical for any value.
    int workers = 4;
};

/// Number of distinct roots of the univariate polynomial with coefficient
/// vector u (u[i] multiplies Y^i) over the coefficient field.  The zero
/// polynomial counts q roots.  Scans exhaustively for q <= 64 and otherwise
/// takes deg gcd(u, Y^q - Y) with Y^q computed by repeated squaring mod u.
int count_univariate_roots(const std::vector<Elem>& u, const Field& field);

/// Exact |{f = 0}| in A^n(F_q), iterating over the q^{n-1} fibers of the last
/// coordinate and counting univariate roots per fiber.
CountResult count_affine(const Hypersurface& X, const CountOptions& opts = {});

/// Same fiberwise count for a bare polynomial; also accepts constants
/// (zero -> q^nvars, nonzero constant -> 0).  Used by the slicing sweep,
/// where plane restrictions may degenerate.
mpz_class count_affine_zeros(const MultiPoly& f, const CountOptions& opts = {});

/// Exhaustive evaluation over all q^n points; oracle for the fiberwise path.
CountResult count_affine_brute(const Hypersurface& X, const CountOptions& opts = {});

/// Exact projective count via the chart recursion P^n = A^n ⊔ P^{n-1}.
CountResult count_projective(const Hypersurface& X, const CountOptions& opts = {});

/// Count of zeros of the plane curve {g = 0} in A^2(F_{q^m}): builds the
/// extension field, transports g along the subfield embedding, and counts
/// fiberwise.  Throws OrderTooLarge when q^m exceeds the field-order cap.
CountResult count_curve_ext(const MultiPoly& g, std::uint32_t m, const CountOptions& opts = {});

}  // namespace lw
