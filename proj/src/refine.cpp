#include "langweil/refine.hpp"

#include <sstream>

namespace lw {

Rat QPi2::rational_part() const {
    auto it = c_.find(0);
    return it == c_.end() ? Rat(0) : it->second;
}

QPi2 QPi2::operator+(const QPi2& o) const {
    QPi2 r = *this;
    for (const auto& [p, v] : o.c_) {
        Rat s = r.c_[p] + v;
        if (s == 0)
            r.c_.erase(p);
        else
            r.c_[p] = std::move(s);
    }
    return r;
}

QPi2 QPi2::operator-() const {
    QPi2 r = *this;
    for (auto& [p, v] : r.c_) v = -v;
    return r;
}

QPi2 QPi2::operator-(const QPi2& o) const { return *this + (-o); }

QPi2 QPi2::operator*(const QPi2& o) const {
    QPi2 r;
    for (const auto& [pa, va] : c_)
        for (const auto& [pb, vb] : o.c_) {
            Rat s = r.c_[pa + pb] + va * vb;
            if (s == 0)
                r.c_.erase(pa + pb);
            else
                r.c_[pa + pb] = std::move(s);
        }
    return r;
}

double QPi2::to_double() const {
    RatInterval pi2 = pi_squared_bounds();
    double mid = lw::to_double((pi2.lo + pi2.hi) / 2);
    double acc = 0, pw = 1;
    unsigned at = 0;
    for (const auto& [p, v] : c_) {
        while (at < p) {
            pw *= mid;
            ++at;
        }
        acc += lw::to_double(v) * pw;
    }
    return acc;
}

std::string QPi2::str() const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, v] : c_) {
        if (!first) out << (v < 0 ? " - " : " + ");
        Rat a = first ? v : Rat(abs(v));
        first = false;
        if (p == 0) {
            out << rat_str(a);
            continue;
        }
        if (a != 1) out << rat_str(a) << "*";
        out << "pi^2";
        if (p > 1) out << "^" << p;
    }
    return out.str();
}

QPi2 HalfSeries::coeff(int upower) const {
    auto it = c.find(upower);
    return it == c.end() ? QPi2() : it->second;
}

int HalfSeries::leading_exponent() const {
    return c.empty() ? o_order : c.begin()->first;
}

HalfSeries HalfSeries::truncated(int new_o) const {
    HalfSeries r;
    r.o_order = std::min(o_order, new_o);
    for (const auto& [t, v] : c)
        if (t < r.o_order && !v.is_zero()) r.c[t] = v;
    return r;
}

HalfSeries HalfSeries::operator+(const HalfSeries& o) const {
    HalfSeries r = *this;
    for (const auto& [t, v] : o.c) {
        QPi2 s = r.coeff(t) + v;
        if (s.is_zero())
            r.c.erase(t);
        else
            r.c[t] = std::move(s);
    }
    return r.truncated(std::min(o_order, o.o_order));
}

HalfSeries HalfSeries::operator-(const HalfSeries& o) const {
    HalfSeries neg = o;
    for (auto& [t, v] : neg.c) v = -v;
    return *this + neg;
}

HalfSeries HalfSeries::operator*(const HalfSeries& o) const {
    // O(u^oa) * lead_b u^lb picks up order oa + lb, and symmetrically.
    int new_o = std::min(o_order + o.leading_exponent(), o.o_order + leading_exponent());
    HalfSeries r;
    r.o_order = new_o;
    for (const auto& [ta, va] : c)
        for (const auto& [tb, vb] : o.c) {
            if (ta + tb >= new_o) continue;
            QPi2 s = r.coeff(ta + tb) + va * vb;
            if (s.is_zero())
                r.c.erase(ta + tb);
            else
                r.c[ta + tb] = std::move(s);
        }
    return r;
}

HalfSeries HalfSeries::scaled(const QPi2& s) const {
    HalfSeries r;
    r.o_order = o_order;
    if (s.is_zero()) return r;
    for (const auto& [t, v] : c) {
        QPi2 p = v * s;
        if (!p.is_zero()) r.c[t] = std::move(p);
    }
    return r;
}

HalfSeries HalfSeries::reciprocal() const {
    QPi2 c0 = coeff(0);
    if (leading_exponent() != 0 || !c0.is_rational() || c0.rational_part() == 0)
        throw NonUnitLeading("series reciprocal needs a nonzero rational constant term");
    Rat inv0 = 1 / c0.rational_part();
    // 1/(c0 (1+g)) = (1/c0) sum (-g)^i with g = a/c0 - 1 of positive order.
    HalfSeries g = scaled(QPi2(inv0));
    g.c.erase(0);
    HalfSeries acc;
    acc.o_order = o_order;
    acc.c[0] = QPi2(1);
    HalfSeries pw = acc;
    int lead = g.leading_exponent();
    for (int i = 1; lead > 0 && i * lead < o_order; ++i) {
        pw = pw * g;
        pw.o_order = o_order;  // powers of g are exact; only the input carries O
        HalfSeries term = pw;
        if (i % 2) {
            for (auto& [t, v] : term.c) v = -v;
        }
        acc = acc + term;
    }
    return acc.scaled(QPi2(inv0)).truncated(o_order);
}

std::string HalfSeries::str() const {
    std::ostringstream out;
    for (const auto& [t, v] : c) {
        out << "(" << v.str() << ")";
        if (t) out << "*u^" << t;
        out << " + ";
    }
    out << "O(u^" << o_order << ")";
    return out.str();
}

namespace {

HalfSeries constant_series(QPi2 v, int o_order) {
    HalfSeries s;
    s.o_order = o_order;
    if (!v.is_zero()) s.c[0] = std::move(v);
    return s;
}

HalfSeries monomial(QPi2 v, int upower, int o_order) {
    HalfSeries s;
    s.o_order = o_order;
    if (!v.is_zero() && upower < o_order) s.c[upower] = std::move(v);
    return s;
}

// sum_{k=2}^d (k-1)^{-m}, optionally relaxing the m = 2 sum to pi^2/6.
QPi2 tail_sum(int d, int m, bool relax_pi) {
    if (relax_pi && m == 2) return QPi2::pi2(Rat(1, 6));
    Rat s = 0;
    for (long k = 2; k <= d; ++k) s += make_rat(1, int_pow(Int(k - 1), m));
    return QPi2(s);
}

void check_order(const HalfSeries& s) {
    if (s.o_order < 1 || s.coeff(0) != QPi2(1))
        throw InsufficientOrder("refinement needs a series 1 + O(u) or better");
}

}  // namespace

HalfSeries refine_upper(const HalfSeries& upper_in, int d, bool relax_pi) {
    if (d < 1) throw Error("refinement needs degree >= 1");
    check_order(upper_in);
    const int in_o = upper_in.o_order;
    const int out_o = in_o + 2;
    long c1 = static_cast<long>(d - 1) * (d - 2);

    const HalfSeries& U = upper_in;

    // b_1/q = 1 + (d-1)(d-2) u + u^2.
    HalfSeries b1 = constant_series(QPi2(1), out_o);
    b1 = b1 + monomial(QPi2(Rat(c1)), 1, out_o);
    b1 = b1 + monomial(QPi2(1), 2, out_o);

    // a_k - mu >= q (k-1) (1 - E/(k-1)) with
    // E = (d-1)(d-2) u + (d^2+d+1) u^2 + (U - 1).
    HalfSeries E = monomial(QPi2(Rat(c1)), 1, in_o) +
                   monomial(QPi2(Rat(1L * d * d + d + 1)), 2, in_o) +
                   (upper_in - constant_series(QPi2(1), in_o));

    // Chebyshev tails, Abel-summed: the q-width rows give
    //   u^2 U sum_j (j+1) E^j S_{j+2},   S_m = sum_{k=2}^d (k-1)^{-m},
    // and the extra k = 2 width b_2 - b_1 = q + d^2 + d adds
    //   (d^2+d) u^4 U sum_j (j+1) E^j.
    HalfSeries total = b1;
    if (d >= 2) {
        HalfSeries qrows = constant_series(QPi2(0), out_o);
        HalfSeries extra = constant_series(QPi2(0), out_o);
        HalfSeries Epow = constant_series(QPi2(1), out_o);  // E^j, exact powers
        int elead = std::max(1, E.leading_exponent());
        for (int j = 0; 2 + j * elead < out_o; ++j) {
            if (j > 0) {
                Epow = Epow * E;
                Epow.o_order = std::min(out_o, E.o_order + (j - 1) * elead);
            }
            qrows = qrows + Epow.scaled(tail_sum(d, j + 2, relax_pi) * QPi2(j + 1));
            extra = extra + Epow.scaled(QPi2(j + 1));
        }
        total = total + (monomial(QPi2(1), 2, out_o) * U * qrows).truncated(out_o);
        total = total + (monomial(QPi2(Rat(1L * d * d + d)), 4, out_o) * U * extra).truncated(out_o);
    }

    // p_inf b_inf <= u^4 U / (1 - u^2 U)^2.
    HalfSeries denom = constant_series(QPi2(1), out_o) - (monomial(QPi2(1), 2, out_o) * U);
    HalfSeries recip = denom.reciprocal();
    total = total + (monomial(QPi2(1), 4, out_o) * U * recip * recip).truncated(out_o);

    return total.truncated(out_o);
}

HalfSeries refine_lower(const HalfSeries& upper_in, const HalfSeries& lower_in, int d,
                        bool relax_pi) {
    (void)relax_pi;  // the substitution lives in the upper pipeline's sums
    if (d < 1) throw Error("refinement needs degree >= 1");
    check_order(upper_in);
    check_order(lower_in);
    if (upper_in.o_order != lower_in.o_order)
        throw InsufficientOrder("upper and lower inputs must share the known order");
    const int out_o = upper_in.o_order + 2;
    long c1 = static_cast<long>(d - 1) * (d - 2);

    const HalfSeries& U = upper_in;

    // Bad-plane probability: p0 <= u^2 U / (L - (d^2/4) u^2)^2.
    HalfSeries gap =
        lower_in - monomial(QPi2(make_rat(Int(d) * d, 4)), 2, lower_in.o_order);
    HalfSeries recip = gap.reciprocal();
    HalfSeries p0 = (monomial(QPi2(1), 2, out_o) * U * recip * recip).truncated(out_o);

    // a_1/q = 1 - (d-1)(d-2) u - (d-1) u^2.
    HalfSeries a1 = constant_series(QPi2(1), out_o) - monomial(QPi2(Rat(c1)), 1, out_o) -
                    monomial(QPi2(Rat(d - 1)), 2, out_o);

    HalfSeries out = (constant_series(QPi2(1), out_o) - p0) * a1;
    return out.truncated(out_o);
}

RefinementTable iterate(int r_max_times_2, int d, bool relax_pi) {
    if (r_max_times_2 < 0) throw Error("refinement order must be non-negative");
    RefinementTable t;
    t.d = d;
    t.relax_pi = relax_pi;
    t.upper = HalfSeries::one_plus_O_u();
    t.lower = HalfSeries::one_plus_O_u();
    while (t.upper.o_order <= r_max_times_2) {
        HalfSeries up = refine_upper(t.upper, d, relax_pi);
        HalfSeries lo = refine_lower(t.upper, t.lower, d, relax_pi);
        t.upper = std::move(up);
        t.lower = std::move(lo);
    }
    t.r2 = t.upper.o_order - 1;
    return t;
}

namespace {

std::string half_str(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

}  // namespace

nlohmann::json refinement_table_json(const RefinementTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (int k = 1; k <= t.r2; ++k) {
        QPi2 C = t.upper.coeff(k);
        QPi2 D = -t.lower.coeff(k);
        rows.push_back({{"j", half_str(k)}, {"C", C.str()}, {"D", D.str()}});
    }
    return {{"d", t.d},
            {"relax_pi", t.relax_pi},
            {"r", half_str(t.r2)},
            {"upper", t.upper.str()},
            {"lower", t.lower.str()},
            {"table", rows}};
}

}  // namespace lw
