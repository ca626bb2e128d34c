#pragma once

#include <json.hpp>

#include "langweil/counting.hpp"
#include "langweil/mpoly.hpp"

namespace lw {

struct Factor {
    MultiPoly poly;
    int multiplicity;
    int degree;
    bool abs_irred;
};

/// Factorization of a plane curve into F_q-irreducibles together with
/// k = the number of distinct factors that are absolutely (geometrically)
/// irreducible — the quantity indexing the slice-count interval system.
struct ComponentReport {
    std::vector<Factor> factors;
    int k = 0;
};

/// Complete factorization of a nonzero bivariate polynomial into monic
/// (graded-lex leading coefficient 1) irreducibles by trial division over
/// the canonical candidate order.  Returns (factor, multiplicity) pairs; the
/// product times a scalar recovers g.  Caps: total degree <= 4, q <= 16.
std::vector<std::pair<MultiPoly, int>> factorize_bivariate(const MultiPoly& g);

/// Classifier for an F_q-irreducible curve of degree e: degree 1 is always
/// absolutely irreducible; otherwise count points over F_{q^m} for the
/// smallest prime m > e and compare against e^2/4.  The verdict is trusted
/// only after certifying the separation inequality
/// q^m - (e-1)(e-2) sqrt(q^m) - e + 1 > e^2/4 (Aubry–Perret side); if it
/// fails, m escalates to the next prime.
bool is_absolutely_irreducible(const MultiPoly& g, const CountOptions& opts = {});

ComponentReport component_count(const MultiPoly& g, const CountOptions& opts = {});

nlohmann::json component_report_json(const ComponentReport& r);

}  // namespace lw
