#include "langweil/gf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace lw {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

using Poly = std::vector<std::uint32_t>;  // coefficients c_0.., no trailing zeros enforced by callers

int poly_deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint64_t p) {
    // Fermat; p prime, a != 0.
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Remainder of a mod b over F_p; b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint64_t p) {
    int db = poly_deg(b);
    std::uint32_t lead_inv = mod_inverse(b[db], p);
    for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
        std::uint64_t f = static_cast<std::uint64_t>(a[da]) * lead_inv % p;
        if (f) {
            int shift = da - db;
            for (int i = 0; i <= db; ++i) {
                std::uint64_t sub = f * b[i] % p;
                a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
            }
        } else {
            a[da] = 0;
        }
    }
    return a;
}

bool divides_exactly(const Poly& divisor, const Poly& dividend, std::uint64_t p) {
    return poly_deg(poly_rem(dividend, divisor, p)) < 0;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
    int d = poly_deg(f);
    if (d <= 0) return false;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (int k = 1; 2 * k <= d; ++k) {
        Poly g(k + 1, 0);
        g[k] = 1;
        std::uint64_t count = 1;
        for (int i = 0; i < k; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t rest = idx;
            for (int i = 0; i < k; ++i) {
                g[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (divides_exactly(g, f, p)) return false;
        }
    }
    return true;
}

struct FieldKey {
    std::uint64_t p;
    std::uint32_t m;
    bool operator<(const FieldKey& o) const { return p != o.p ? p < o.p : m < o.m; }
};

std::map<FieldKey, std::shared_ptr<const Field>>& field_cache() {
    static std::map<FieldKey, std::shared_ptr<const Field>> cache;
    return cache;
}

std::mutex& field_cache_mutex() {
    static std::mutex mu;
    return mu;
}

struct FieldMaker : Field {
    FieldMaker(std::uint64_t p, std::uint32_t m);
};

}  // namespace

std::shared_ptr<const Field> Field::make(std::uint64_t p, std::uint32_t m) {
    if (!is_prime_u64(p)) throw NonPrimeCharacteristic(p);
    if (m < 1) throw OrderTooLarge("extension degree must be positive");
    // Overflow-safe order check.
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        if (q > kOrderCap / p) throw OrderTooLarge("field order p^m exceeds cap 2^20");
        q *= p;
    }
    if (q > kOrderCap) throw OrderTooLarge("field order p^m exceeds cap 2^20");

    std::lock_guard<std::mutex> lock(field_cache_mutex());
    auto& cache = field_cache();
    FieldKey key{p, m};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::shared_ptr<const Field> field = std::make_shared<const FieldMaker>(p, m);
    cache.emplace(key, field);
    return field;
}

FieldMaker::FieldMaker(std::uint64_t p, std::uint32_t m) : Field(p, m) {}

Field::Field(std::uint64_t p, std::uint32_t m) : p_(p), m_(m) {
    q_ = 1;
    for (std::uint32_t i = 0; i < m; ++i) q_ *= p;
    one_ = 1;

    if (m_ == 1) {
        modulus_ = {0, 1};  // t
        // Primitive root mod p.
        if (p_ == 2) {
            gen_ = 1;
        } else {
            auto primes = prime_factors(p_ - 1);
            for (std::uint64_t g = 2;; ++g) {
                bool ok = true;
                for (auto ell : primes) {
                    // g^((p-1)/ell) mod p
                    std::uint64_t r = 1, b = g % p_, e = (p_ - 1) / ell;
                    while (e) {
                        if (e & 1) r = r * b % p_;
                        b = b * b % p_;
                        e >>= 1;
                    }
                    if (r == 1) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    gen_ = static_cast<Elem>(g);
                    break;
                }
            }
        }
        return;
    }

    // Lexicographically smallest monic irreducible modulus: candidates ordered
    // by the coefficient vector (c_0, ..., c_{m-1}) with c_0 most significant.
    {
        Poly f(m_ + 1, 0);
        f[m_] = 1;
        std::uint64_t count = q_;
        bool found = false;
        for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
            std::uint64_t rest = idx;
            for (std::uint32_t i = 0; i < m_; ++i) {
                // c_0 is the most significant digit of idx.
                f[m_ - 1 - i] = static_cast<std::uint32_t>(rest % p_);
                rest /= p_;
            }
            if (is_irreducible(f, p_)) {
                modulus_ = f;
                found = true;
            }
        }
        if (!found) throw Error("no irreducible modulus found");  // unreachable
    }

    // Multiplicative generator via polynomial powering.
    auto primes = prime_factors(q_ - 1);
    auto poly_of = [&](Elem x) {
        Poly c(m_, 0);
        std::uint64_t rest = x;
        for (std::uint32_t i = 0; i < m_; ++i) {
            c[i] = static_cast<std::uint32_t>(rest % p_);
            rest /= p_;
        }
        return c;
    };
    auto pack = [&](const Poly& c) {
        std::uint64_t v = 0;
        for (std::uint32_t i = m_; i-- > 0;) v = v * p_ + (i < c.size() ? c[i] : 0);
        return static_cast<Elem>(v);
    };
    auto poly_mulmod = [&](const Poly& a, const Poly& b) {
        Poly prod(2 * m_ - 1, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (!a[i]) continue;
            for (std::uint32_t j = 0; j < m_; ++j) {
                if (!b[j]) continue;
                prod[i + j] = static_cast<std::uint32_t>(
                    (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_);
            }
        }
        Poly r = poly_rem(std::move(prod), modulus_, p_);
        r.resize(m_, 0);
        return r;
    };
    auto powmod = [&](Poly base, std::uint64_t e) {
        Poly r(m_, 0);
        r[0] = 1;
        while (e) {
            if (e & 1) r = poly_mulmod(r, base);
            base = poly_mulmod(base, base);
            e >>= 1;
        }
        return r;
    };
    gen_ = 0;
    for (Elem g = 2; g < q_; ++g) {
        Poly gp = poly_of(g);
        bool ok = true;
        for (auto ell : primes) {
            Poly r = powmod(gp, (q_ - 1) / ell);
            if (pack(r) == one_) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen_ = g;
            break;
        }
    }
    if (gen_ == 0) throw Error("no multiplicative generator found");  // unreachable

    // Discrete log tables.
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Poly cur(m_, 0);
    cur[0] = 1;
    Poly gp = poly_of(gen_);
    for (std::uint64_t i = 0; i < q_ - 1; ++i) {
        Elem packed = pack(cur);
        exp_[i] = packed;
        log_[packed] = static_cast<std::uint32_t>(i);
        cur = poly_mulmod(cur, gp);
    }
    if (pack(cur) != one_) throw Error("generator order mismatch");  // unreachable
}

Field::~Field() = default;

Elem Field::from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    return static_cast<Elem>(r);
}

std::uint32_t Field::coeff(Elem x, std::uint32_t i) const {
    std::uint64_t v = x;
    for (std::uint32_t j = 0; j < i; ++j) v /= p_;
    return static_cast<std::uint32_t>(v % p_);
}

Elem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
    std::uint64_t v = 0;
    for (std::uint32_t i = m_; i-- > 0;) {
        std::uint32_t digit = i < c.size() ? c[i] : 0;
        if (digit >= p_) throw Error("coefficient out of range");
        v = v * p_ + digit;
    }
    return static_cast<Elem>(v);
}

Elem Field::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (m_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) + b) % p_);
    std::uint64_t out = 0, mul = 1;
    std::uint64_t ua = a, ub = b;
    for (std::uint32_t i = 0; i < m_; ++i) {
        out += (ua % p_ + ub % p_) % p_ * mul;
        ua /= p_;
        ub /= p_;
        mul *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    if (m_ == 1) return a ? static_cast<Elem>(p_ - a) : 0;
    std::uint64_t out = 0, mul = 1;
    std::uint64_t ua = a;
    for (std::uint32_t i = 0; i < m_; ++i) {
        std::uint64_t d = ua % p_;
        out += (d ? p_ - d : 0) * mul;
        ua /= p_;
        mul *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (m_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    std::uint64_t l = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (l >= q_ - 1) l -= q_ - 1;
    return exp_[l];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero();
    if (m_ == 1) return static_cast<Elem>(mod_inverse(a, p_));
    std::uint32_t l = log_[a];
    return l == 0 ? one_ : exp_[q_ - 1 - l];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, unsigned long long e) const {
    if (a == 0) return e == 0 ? one_ : 0;
    if (m_ == 1) {
        std::uint64_t r = 1, b = a, exp = e % (p_ - 1);
        if (e != 0 && exp == 0) exp = p_ - 1;
        // a^(p-1) = 1, so reducing the exponent mod p-1 is safe for a != 0.
        while (exp) {
            if (exp & 1) r = r * b % p_;
            b = b * b % p_;
            exp >>= 1;
        }
        return static_cast<Elem>(r);
    }
    std::uint64_t l = static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
    return exp_[l];
}

std::string Field::to_string(Elem x) const {
    if (m_ == 1) return std::to_string(x);
    if (x == 0) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::uint32_t i = m_; i-- > 0;) {
        std::uint32_t c = coeff(x, i);
        if (!c) continue;
        if (!first) out << "+";
        first = false;
        if (i == 0) {
            out << c;
        } else {
            if (c != 1) out << c;
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

Elem Field::parse_element(const std::string& text) const {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    Elem acc = 0;
    bool any = false;
    skip_ws();
    while (pos < text.size()) {
        long long sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (any) {
            throw ParseError("expected '+' or '-'", pos);
        }
        long long coeff_val = 1;
        bool saw_num = false;
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff_val = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coeff_val = coeff_val * 10 + (text[pos] - '0');
                ++pos;
            }
            saw_num = true;
        }
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            skip_ws();
        }
        std::uint32_t t_exp = 0;
        if (pos < text.size() && text[pos] == 't') {
            ++pos;
            t_exp = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                    throw ParseError("expected exponent", pos);
                t_exp = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    t_exp = t_exp * 10 + static_cast<std::uint32_t>(text[pos] - '0');
                    ++pos;
                }
            }
        } else if (!saw_num) {
            throw ParseError("expected coefficient or 't'", pos);
        }
        if (t_exp >= m_) throw ParseError("t-power exceeds field degree", pos);
        Elem c = from_int(sign * coeff_val);
        std::vector<std::uint32_t> mono(m_, 0);
        mono[t_exp] = 1;
        acc = add(acc, mul(c, from_coeffs(mono)));
        any = true;
        skip_ws();
    }
    if (!any) throw ParseError("empty element", 0);
    return acc;
}

std::vector<FieldElement> enumerate(const FieldPtr& field) {
    std::vector<FieldElement> out;
    out.reserve(field->q());
    for (std::uint64_t i = 0; i < field->q(); ++i)
        out.emplace_back(field, static_cast<Elem>(i));
    return out;
}

Embedding::Embedding(FieldPtr source, FieldPtr target, Elem generator_image)
    : src_(std::move(source)), tgt_(std::move(target)), img_(generator_image) {
    img_pow_.resize(src_->m());
    Elem cur = tgt_->one();
    for (std::uint32_t i = 0; i < src_->m(); ++i) {
        img_pow_[i] = cur;
        cur = tgt_->mul(cur, img_);
    }
}

Elem Embedding::apply_raw(Elem x) const {
    Elem acc = 0;
    std::uint64_t rest = x;
    for (std::uint32_t i = 0; i < src_->m(); ++i) {
        std::uint32_t digit = static_cast<std::uint32_t>(rest % src_->p());
        rest /= src_->p();
        if (digit) acc = tgt_->add(acc, tgt_->mul(tgt_->from_int(digit), img_pow_[i]));
    }
    return acc;
}

FieldElement Embedding::apply(const FieldElement& x) const {
    if (!x.field() || !x.field()->same_field(*src_)) throw MixedFields();
    return FieldElement(tgt_, apply_raw(x.value()));
}

Embedding embed(const FieldPtr& source, const FieldPtr& target) {
    if (source->p() != target->p() || target->m() % source->m() != 0)
        throw NoEmbedding("no embedding: requires equal characteristic and divisible degree");
    const auto& mod = source->modulus();
    // First root of the source modulus in target enumeration order.
    for (std::uint64_t x = 0; x < target->q(); ++x) {
        Elem acc = 0;
        for (std::uint32_t i = source->m() + 1; i-- > 0;) {
            acc = target->mul(acc, static_cast<Elem>(x));
            if (mod[i]) acc = target->add(acc, target->from_int(mod[i]));
        }
        if (acc == 0) return Embedding(source, target, static_cast<Elem>(x));
    }
    throw NoEmbedding("no root of source modulus in target");  // unreachable for valid inputs
}

}  // namespace lw
