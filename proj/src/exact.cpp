#include "langweil/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace lw {

Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Rat rat_pow(const Rat& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
        return 1 / rat_pow(base, -exp);
    }
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
    r.canonicalize();
    return r;
}

double to_double(const Rat& x) { return x.get_d(); }

std::string rat_str(const Rat& x) { return x.get_str(); }

SqrtExt::SqrtExt(Rat a, Rat b, Int radicand) : a_(std::move(a)), b_(std::move(b)), rad_(std::move(radicand)) {
    if (rad_ < 0) throw std::domain_error("SqrtExt: negative radicand");
    normalize();
}

void SqrtExt::normalize() {
    if (b_ == 0) {
        rad_ = 0;
        return;
    }
    if (rad_ == 0) {
        b_ = 0;
        return;
    }
    Int root;
    if (mpz_perfect_square_p(rad_.get_mpz_t())) {
        mpz_sqrt(root.get_mpz_t(), rad_.get_mpz_t());
        a_ += b_ * Rat(root);
        b_ = 0;
        rad_ = 0;
    }
}

int SqrtExt::sign() const {
    if (b_ == 0) return sgn(a_);
    if (a_ == 0) return sgn(b_);
    int sa = sgn(a_), sb = sgn(b_);
    if (sa == sb) return sa;
    // a and b*sqrt(rad) have opposite signs; compare a^2 with b^2*rad.
    Rat a2 = a_ * a_;
    Rat b2r = b_ * b_ * Rat(rad_);
    int c = cmp(a2, b2r);
    if (c == 0) return 0;
    return c > 0 ? sa : sb;
}

Int SqrtExt::common_radicand(const SqrtExt& x, const SqrtExt& y) {
    if (x.b_ == 0) return y.rad_;
    if (y.b_ == 0) return x.rad_;
    if (x.rad_ != y.rad_) throw std::domain_error("SqrtExt: mismatched radicands");
    return x.rad_;
}

SqrtExt SqrtExt::operator-() const { return SqrtExt(-a_, -b_, rad_); }

SqrtExt SqrtExt::operator+(const SqrtExt& o) const {
    return SqrtExt(a_ + o.a_, b_ + o.b_, common_radicand(*this, o));
}

SqrtExt SqrtExt::operator-(const SqrtExt& o) const {
    return SqrtExt(a_ - o.a_, b_ - o.b_, common_radicand(*this, o));
}

SqrtExt SqrtExt::operator*(const Rat& s) const { return SqrtExt(a_ * s, b_ * s, rad_); }

double SqrtExt::to_double() const {
    double r = a_.get_d();
    if (b_ != 0) r += b_.get_d() * std::sqrt(rad_.get_d());
    return r;
}

std::string SqrtExt::str() const {
    if (b_ == 0) return a_.get_str();
    std::string s = (a_ == 0) ? std::string() : a_.get_str();
    std::string bs = b_.get_str();
    if (!s.empty()) {
        if (bs.size() && bs[0] == '-') {
            s += " - ";
            bs = bs.substr(1);
        } else {
            s += " + ";
        }
    }
    if (bs == "1")
        s += "sqrt(" + rad_.get_str() + ")";
    else
        s += bs + "*sqrt(" + rad_.get_str() + ")";
    return s;
}

RatInterval RatInterval::operator*(const RatInterval& o) const {
    Rat c1 = lo * o.lo, c2 = lo * o.hi, c3 = hi * o.lo, c4 = hi * o.hi;
    Rat mn = c1, mx = c1;
    for (const Rat* v : {&c2, &c3, &c4}) {
        if (*v < mn) mn = *v;
        if (*v > mx) mx = *v;
    }
    return {mn, mx};
}

RatInterval RatInterval::operator*(const Rat& s) const {
    if (s >= 0) return {lo * s, hi * s};
    return {hi * s, lo * s};
}

RatInterval nth_root_bounds(const Rat& x, unsigned k, unsigned digits) {
    if (x < 0) throw std::domain_error("nth_root_bounds: negative argument");
    if (k == 0) throw std::domain_error("nth_root_bounds: zeroth root");
    Int scale = int_pow(10, digits);
    Int scale_k = int_pow(scale, k);
    // y = floor(x * scale^k); root(y) <= x^(1/k)*scale < root(y) + 1 need not
    // hold for the upper end, so widen by one ulp on each side.
    Int num = x.get_num() * scale_k;
    Int y;
    mpz_fdiv_q(y.get_mpz_t(), num.get_mpz_t(), x.get_den().get_mpz_t());
    Int r;
    mpz_root(r.get_mpz_t(), y.get_mpz_t(), k);
    // r <= (x*scale^k)^(1/k) < r+2 (the +2 absorbs the floor in y).
    return {Rat(r) / Rat(scale), Rat(r + 2) / Rat(scale)};
}

RatInterval pi_squared_bounds() {
    // pi^2 = 9.869604401089358618834490999876...
    static const Int num("9869604401089358618834490999876");
    static const Int den = int_pow(10, 30);
    return {Rat(num) / Rat(den), Rat(num + 1) / Rat(den)};
}

int interval_cmp(const RatInterval& lhs, const RatInterval& rhs) {
    if (lhs.lo > rhs.hi) return 1;
    if (lhs.hi < rhs.lo) return -1;
    return 0;
}

}  // namespace lw
