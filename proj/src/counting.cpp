#include "langweil/counting.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

namespace lw {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

// --- univariate arithmetic over a Field (coefficient vectors, u[i]·Y^i) ---

void trim(std::vector<Elem>& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
}

// a * b mod m, with m monic of degree >= 1.
std::vector<Elem> mulmod(const std::vector<Elem>& a, const std::vector<Elem>& b,
                         const std::vector<Elem>& m, const Field& F) {
    if (a.empty() || b.empty()) return {};
    std::vector<Elem> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j]) prod[i + j] = F.add(prod[i + j], F.mul(a[i], b[j]));
    }
    std::size_t dm = m.size() - 1;
    for (std::size_t i = prod.size(); i-- > dm;) {
        Elem c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < dm; ++j)
            prod[i - dm + j] = F.sub(prod[i - dm + j], F.mul(c, m[j]));
    }
    prod.resize(std::min(prod.size(), dm));
    trim(prod);
    return prod;
}

std::vector<Elem> poly_gcd(std::vector<Elem> a, std::vector<Elem> b, const Field& F) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        Elem lead_inv = F.inv(b.back());
        while (a.size() >= b.size()) {
            Elem c = F.mul(a.back(), lead_inv);
            if (c) {
                std::size_t off = a.size() - b.size();
                for (std::size_t j = 0; j < b.size(); ++j)
                    a[off + j] = F.sub(a[off + j], F.mul(c, b[j]));
            }
            a.pop_back();
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

int count_univariate_roots(const std::vector<Elem>& u_in, const Field& F) {
    std::vector<Elem> u = u_in;
    trim(u);
    if (u.empty()) return static_cast<int>(F.q());
    if (u.size() == 1) return 0;
    std::uint64_t q = F.q();
    if (q <= 64) {
        int roots = 0;
        for (Elem y = 0; y < q; ++y) {
            Elem acc = 0;
            for (std::size_t i = u.size(); i-- > 0;) acc = F.add(F.mul(acc, y), u[i]);
            if (!acc) ++roots;
        }
        return roots;
    }
    // gcd(u, Y^q - Y): Y^q mod u by repeated squaring, then one subtraction.
    std::vector<Elem> monic = u;
    Elem lead_inv = F.inv(monic.back());
    for (auto& c : monic) c = F.mul(c, lead_inv);
    std::vector<Elem> pw = {F.one()};
    std::vector<Elem> sq = mulmod({0, F.one()}, {F.one()}, monic, F);  // Y mod u
    for (std::uint64_t e = q; e; e >>= 1) {
        if (e & 1) pw = mulmod(pw, sq, monic, F);
        sq = mulmod(sq, sq, monic, F);
    }
    // pw = Y^q mod u; subtract Y.
    if (pw.size() < 2) pw.resize(2, 0);
    pw[1] = F.sub(pw[1], F.one());
    trim(pw);
    std::vector<Elem> g = poly_gcd(monic, pw, F);
    return g.empty() ? static_cast<int>(q) : static_cast<int>(g.size() - 1);
}

namespace {

// Terms of f grouped for fiberwise evaluation: coefficient of Y^k over the
// fiber (x_1..x_{n-1}) = point is the sum of coeff * prod point[i]^{pre[i]}.
struct FiberTerm {
    std::uint32_t last_exp;
    ExpVec prefix;  // length n-1
    Elem coeff;
};

std::uint64_t affine_count_range(const std::vector<FiberTerm>& terms, int last_deg,
                                 const Field& F, int nprefix, std::uint64_t lo,
                                 std::uint64_t hi) {
    std::uint64_t q = F.q();
    std::vector<Elem> point(nprefix);
    std::vector<Elem> coeffs(static_cast<std::size_t>(last_deg) + 1);
    std::uint64_t total = 0;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::uint64_t rem = idx;
        for (int i = 0; i < nprefix; ++i) {
            point[i] = static_cast<Elem>(rem % q);
            rem /= q;
        }
        std::fill(coeffs.begin(), coeffs.end(), 0);
        for (const auto& t : terms) {
            Elem v = t.coeff;
            for (int i = 0; i < nprefix && v; ++i)
                if (t.prefix[i]) v = F.mul(v, F.pow(point[i], t.prefix[i]));
            coeffs[t.last_exp] = F.add(coeffs[t.last_exp], v);
        }
        total += static_cast<std::uint64_t>(count_univariate_roots(coeffs, F));
    }
    return total;
}

mpz_class pow_mpz(std::uint64_t q, int e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
    return r;
}

// Fiberwise count of {f = 0} in A^n; f may be any polynomial (constants ok).
mpz_class count_affine_raw(const MultiPoly& f, const CountOptions& opts, bool& used_gcd) {
    const Field& F = *f.field();
    std::uint64_t q = F.q();
    int n = f.nvars();
    used_gcd = q > 64;
    if (f.is_zero()) return pow_mpz(q, n);
    if (*f.total_degree() == 0) return 0;

    std::vector<FiberTerm> terms;
    int last_deg = 0;
    for (const auto& [e, c] : f.terms()) {
        FiberTerm t;
        t.last_exp = e[n - 1];
        t.prefix.assign(e.begin(), e.end() - 1);
        t.coeff = c;
        last_deg = std::max(last_deg, static_cast<int>(t.last_exp));
        terms.push_back(std::move(t));
    }

    mpz_class fibers = pow_mpz(q, n - 1);
    std::uint64_t per_fiber =
        static_cast<std::uint64_t>(terms.size()) * static_cast<std::uint64_t>(std::max(1, n - 1)) +
        (q <= 64 ? q : static_cast<std::uint64_t>(last_deg + 1) * (last_deg + 1) * 64);
    mpz_class estimate = fibers * static_cast<unsigned long>(per_fiber);
    if (estimate > mpz_class(static_cast<unsigned long>(opts.work_cap)))
        throw WorkCapExceeded(
            estimate.fits_ulong_p() ? estimate.get_ui() : UINT64_MAX, opts.work_cap);

    std::uint64_t nfibers = fibers.get_ui();
    int workers = std::max(1, opts.workers);
    if (static_cast<std::uint64_t>(workers) > nfibers) workers = static_cast<int>(nfibers);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    std::uint64_t chunk = nfibers / workers, extra = nfibers % workers, lo = 0;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
        pool.emplace_back([&, w, lo, hi] {
            partial[w] = affine_count_range(terms, last_deg, F, n - 1, lo, hi);
        });
        lo = hi;
    }
    for (auto& t : pool) t.join();
    mpz_class total = 0;
    for (auto v : partial) total += static_cast<unsigned long>(v);
    return total;
}

MultiPoly restrict_first_var_zero(const MultiPoly& f) {
    MultiPoly out(f.field(), f.nvars() - 1);
    for (const auto& [e, c] : f.terms()) {
        if (e[0]) continue;
        out.add_term(ExpVec(e.begin() + 1, e.end()), c);
    }
    return out;
}

}  // namespace

mpz_class count_affine_zeros(const MultiPoly& f, const CountOptions& opts) {
    bool used_gcd = false;
    return count_affine_raw(f, opts, used_gcd);
}

CountResult count_affine(const Hypersurface& X, const CountOptions& opts) {
    if (X.setting != Setting::affine) throw DimensionMismatch("count_affine needs an affine hypersurface");
    auto t0 = Clock::now();
    bool used_gcd = false;
    CountResult r;
    r.count = count_affine_raw(X.f, opts, used_gcd);
    r.q = X.f.field()->q();
    r.n = X.ambient_dim;
    r.setting = Setting::affine;
    r.method = used_gcd ? "fiberwise_gcd" : "fiberwise";
    r.elapsed_ms = ms_since(t0);
    return r;
}

CountResult count_affine_brute(const Hypersurface& X, const CountOptions& opts) {
    if (X.setting != Setting::affine) throw DimensionMismatch("count_affine needs an affine hypersurface");
    auto t0 = Clock::now();
    const Field& F = *X.f.field();
    std::uint64_t q = F.q();
    int n = X.ambient_dim;
    mpz_class points = pow_mpz(q, n);
    mpz_class estimate = points * static_cast<unsigned long>(X.f.terms().size() + 1);
    if (estimate > mpz_class(static_cast<unsigned long>(opts.work_cap)))
        throw WorkCapExceeded(
            estimate.fits_ulong_p() ? estimate.get_ui() : UINT64_MAX, opts.work_cap);

    std::uint64_t npoints = points.get_ui(), total = 0;
    std::vector<Elem> pt(n);
    for (std::uint64_t idx = 0; idx < npoints; ++idx) {
        std::uint64_t rem = idx;
        for (int i = 0; i < n; ++i) {
            pt[i] = static_cast<Elem>(rem % q);
            rem /= q;
        }
        if (!X.f.evaluate(pt)) ++total;
    }
    CountResult r;
    r.count = static_cast<unsigned long>(total);
    r.q = q;
    r.n = n;
    r.setting = Setting::affine;
    r.method = "brute";
    r.elapsed_ms = ms_since(t0);
    return r;
}

CountResult count_projective(const Hypersurface& X, const CountOptions& opts) {
    if (X.setting != Setting::projective)
        throw DimensionMismatch("count_projective needs a projective hypersurface");
    auto t0 = Clock::now();
    const FieldPtr& field = X.f.field();
    std::uint64_t q = field->q();
    bool used_gcd = false;
    mpz_class total = 0;
    MultiPoly h = X.f;  // homogeneous form on the current chart's P^{n-i}
    int dim = X.ambient_dim;
    while (true) {
        if (h.is_zero()) {
            // The remaining P^dim lies entirely inside X.
            total += (pow_mpz(q, dim + 1) - 1) / (q - 1);
            break;
        }
        if (dim == 0) {
            // h = c * x^d with c != 0: the single point is not a zero.
            break;
        }
        bool g = false;
        total += count_affine_raw(dehomogenize(h, 0), opts, g);
        used_gcd = used_gcd || g;
        h = restrict_first_var_zero(h);
        --dim;
    }
    CountResult r;
    r.count = std::move(total);
    r.q = q;
    r.n = X.ambient_dim;
    r.setting = Setting::projective;
    r.method = used_gcd ? "fiberwise_gcd" : "fiberwise";
    r.elapsed_ms = ms_since(t0);
    return r;
}

CountResult count_curve_ext(const MultiPoly& g, std::uint32_t m, const CountOptions& opts) {
    if (g.nvars() != 2) throw ArityMismatch("count_curve_ext needs a bivariate polynomial");
    if (m < 1) throw Error("extension degree must be positive");
    auto t0 = Clock::now();
    const FieldPtr& src = g.field();
    std::uint64_t total_m = static_cast<std::uint64_t>(src->m()) * m;
    // Field::make enforces the order cap and throws OrderTooLarge beyond it.
    FieldPtr big = Field::make(src->p(), static_cast<std::uint32_t>(total_m));
    MultiPoly gbig = m == 1 ? g : map_coefficients(g, embed(src, big));
    bool used_gcd = false;
    CountResult r;
    r.count = count_affine_raw(gbig, opts, used_gcd);
    r.q = big->q();
    r.n = 2;
    r.setting = Setting::affine;
    r.method = used_gcd ? "fiberwise_gcd" : "fiberwise";
    r.elapsed_ms = ms_since(t0);
    return r;
}

}  // namespace lw
