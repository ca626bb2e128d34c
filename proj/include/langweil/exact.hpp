#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lw {

using Rat = mpq_class;
using Int = mpz_class;

inline int sgn(const Rat& x) { return ::sgn(x); }
inline int sgn(const Int& x) { return ::sgn(x); }

Int int_pow(const Int& base, unsigned long exp);
Rat rat_pow(const Rat& base, long exp);

/// Canonicalized fraction; mpq_class's two-argument constructor does not
/// reduce, which silently breaks comparisons.
inline Rat make_rat(Int num, Int den) {
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

double to_double(const Rat& x);
std::string rat_str(const Rat& x);

/// Exact value of the form a + b*sqrt(radicand) with rational a, b and a
/// non-negative integer radicand.  Comparisons are decided by sign analysis
/// and squaring; no floating point is involved.
class SqrtExt {
  public:
    SqrtExt() : rad_(0) {}
    SqrtExt(Rat a, Rat b, Int radicand);
    static SqrtExt rational(Rat a) { return SqrtExt(std::move(a), 0, 0); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Int& radicand() const { return rad_; }

    // -1, 0, +1
    int sign() const;

    SqrtExt operator-() const;
    SqrtExt operator+(const SqrtExt& o) const;
    SqrtExt operator-(const SqrtExt& o) const;
    SqrtExt operator*(const Rat& s) const;

    bool operator<(const SqrtExt& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const SqrtExt& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const SqrtExt& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const SqrtExt& o) const { return (*this - o).sign() >= 0; }
    bool operator==(const SqrtExt& o) const { return (*this - o).sign() == 0; }

    double to_double() const;
    std::string str() const;

  private:
    Rat a_, b_;
    Int rad_;
    void normalize();
    static Int common_radicand(const SqrtExt& x, const SqrtExt& y);
};

inline SqrtExt sqrt_term(Rat b, Int radicand) { return SqrtExt(0, std::move(b), std::move(radicand)); }

/// Closed rational interval; used for certified enclosures of irrational values.
struct RatInterval {
    Rat lo, hi;

    RatInterval() = default;
    RatInterval(Rat v) : lo(v), hi(std::move(v)) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator*(const Rat& s) const;
};

/// Certified enclosure of x^(1/k) for rational x >= 0, with width about 10^-digits.
RatInterval nth_root_bounds(const Rat& x, unsigned k, unsigned digits);

/// Certified enclosure of pi^2 (30 decimal digits).
RatInterval pi_squared_bounds();

/// Certified strict comparison: returns +1 if lhs > rhs for sure, -1 if
/// lhs < rhs for sure, 0 if undecided at this precision.
int interval_cmp(const RatInterval& lhs, const RatInterval& rhs);

}  // namespace lw
