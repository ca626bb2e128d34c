#pragma once

#include <json.hpp>

#include <map>

#include "langweil/errors.hpp"
#include "langweil/exact.hpp"

namespace lw {

/// Element of the polynomial ring Q[pi^2]: a finite map from powers of pi^2
/// to exact rationals.  No zero coefficients are stored; equality is exact
/// structural equality.
class QPi2 {
  public:
    QPi2() = default;
    QPi2(long v) : QPi2(Rat(v)) {}
    QPi2(Rat v) {
        if (v != 0) c_[0] = std::move(v);
    }
    static QPi2 pi2(Rat coeff) {
        QPi2 x;
        if (coeff != 0) x.c_[1] = std::move(coeff);
        return x;
    }

    const std::map<unsigned, Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_rational() const { return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0); }
    Rat rational_part() const;

    QPi2 operator+(const QPi2& o) const;
    QPi2 operator-(const QPi2& o) const;
    QPi2 operator*(const QPi2& o) const;
    QPi2 operator-() const;
    bool operator==(const QPi2& o) const { return c_ == o.c_; }

    /// Numeric value with pi^2 at its certified midpoint (display only).
    double to_double() const;
    std::string str() const;  // e.g. "35/2 + 1/6*pi^2"

  private:
    std::map<unsigned, Rat> c_;
};

/// Truncated series in u = q^{-1/2} with coefficients in Q[pi^2]: the value
/// sum_t c[t] u^t + O(u^o_order).  Exponents are stored in u-units, so the
/// half-integer q-order j corresponds to key 2j; all stored keys are
/// < o_order.  The normalized quantity tracked throughout is mu/q, whose
/// leading coefficient is 1.
struct HalfSeries {
    std::map<int, QPi2> c;
    int o_order = 0;  // first unknown u-power

    static HalfSeries one_plus_O_u() {
        HalfSeries s;
        s.c[0] = QPi2(1);
        s.o_order = 1;
        return s;
    }

    QPi2 coeff(int upower) const;
    int leading_exponent() const;  // o_order when the series has no known terms

    HalfSeries truncated(int new_o) const;
    HalfSeries operator+(const HalfSeries& o) const;
    HalfSeries operator-(const HalfSeries& o) const;
    HalfSeries operator*(const HalfSeries& o) const;
    HalfSeries scaled(const QPi2& s) const;
    bool operator==(const HalfSeries& o) const { return c == o.c && o_order == o.o_order; }

    /// Multiplicative inverse; requires leading exponent 0 with a nonzero
    /// rational (pi^2-free) constant coefficient.  Throws NonUnitLeading.
    HalfSeries reciprocal() const;

    std::string str() const;
};

/// One Chebyshev/Abel refinement step for the upper bound: consumes an upper
/// series for mu/q with o_order = 2r+1 (r >= 0) and produces the refined
/// upper series with o_order = 2r+3.  When relax_pi is set, the factor
/// sum_{k=2}^d (k-1)^{-2} is replaced by pi^2/6; all other k-sums stay exact.
HalfSeries refine_upper(const HalfSeries& upper_in, int d, bool relax_pi);

/// One bad-plane refinement step for the lower bound: probability of a bad
/// plane is bounded by upper_in / (lower_in - (d^2/4)u^2)^2 * u^2 and every
/// good plane contributes at least a_1.  Inputs share o_order = 2r+1.
/// (relax_pi only enters through coefficients already present in upper_in.)
HalfSeries refine_lower(const HalfSeries& upper_in, const HalfSeries& lower_in, int d,
                        bool relax_pi);

struct RefinementTable {
    int d = 0;
    bool relax_pi = true;
    HalfSeries upper, lower;
    int r2 = 0;  // twice the known half-order r (upper/lower o_order = r2 + 1)
};

/// Alternating refinement from the seed upper = lower = 1 + O(u) until the
/// known order exceeds r_max (given as 2*r_max to stay integral).
RefinementTable iterate(int r_max_times_2, int d, bool relax_pi);

nlohmann::json refinement_table_json(const RefinementTable& t);

}  // namespace lw
