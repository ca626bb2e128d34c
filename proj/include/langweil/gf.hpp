#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "langweil/errors.hpp"

namespace lw {

/// Packed field element: the coefficient vector (c_0, ..., c_{m-1}) of an
/// element of F_p[t]/(h(t)) stored as the integer sum c_i * p^i.
using Elem = std::uint32_t;

/// A finite field F_{p^m} presented as F_p[t]/(h(t)) with h the
/// lexicographically smallest monic irreducible polynomial of degree m.
/// Descriptors are immutable after construction and cached per (p, m); all
/// element operations are pure and safe for data-parallel use.
///
/// Multiplicative arithmetic for extension fields runs on discrete-log
/// tables, so the order is capped at 2^20.
class Field {
  public:
    static constexpr std::uint64_t kOrderCap = 1ULL << 20;

    /// Cached factory; same (p, m) always yields the same presentation.
    static std::shared_ptr<const Field> make(std::uint64_t p, std::uint32_t m);

    std::uint64_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t q() const { return q_; }

    /// Monic modulus, coefficients c_0..c_m with c_m = 1.  For m = 1 this is
    /// the degenerate modulus t.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return one_; }
    bool same_field(const Field& o) const { return this == &o; }

    /// Integer reduced mod p, as a constant of the field.
    Elem from_int(long long v) const;

    std::uint32_t coeff(Elem x, std::uint32_t i) const;
    Elem from_coeffs(const std::vector<std::uint32_t>& c) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;  // throws DivisionByZero
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, unsigned long long e) const;
    Elem frobenius(Elem a) const { return pow(a, p_); }

    /// A generator of the multiplicative group.
    Elem generator() const { return gen_; }

    /// Polynomial-in-t text form, e.g. "t^2+2t+1"; prime-field elements print
    /// as bare integers.
    std::string to_string(Elem x) const;
    Elem parse_element(const std::string& text) const;

    ~Field();

  protected:
    Field(std::uint64_t p, std::uint32_t m);

  private:
    std::uint64_t p_;
    std::uint32_t m_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    Elem one_;
    Elem gen_;
    std::vector<Elem> exp_;       // exp_[i] = g^i, size q-1 (extension fields)
    std::vector<std::uint32_t> log_;  // log_[x] for x != 0
};

using FieldPtr = std::shared_ptr<const Field>;

/// Typed element for the public API; cross-field arithmetic is a hard error.
class FieldElement {
  public:
    FieldElement() = default;
    FieldElement(FieldPtr field, Elem v) : field_(std::move(field)), v_(v) {}

    const FieldPtr& field() const { return field_; }
    Elem value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return wrap(field_->add(v_, check(o))); }
    FieldElement operator-(const FieldElement& o) const { return wrap(field_->sub(v_, check(o))); }
    FieldElement operator*(const FieldElement& o) const { return wrap(field_->mul(v_, check(o))); }
    FieldElement operator/(const FieldElement& o) const { return wrap(field_->div(v_, check(o))); }
    FieldElement operator-() const { return wrap(field_->neg(v_)); }
    FieldElement inverse() const { return wrap(field_->inv(v_)); }
    FieldElement pow(unsigned long long e) const { return wrap(field_->pow(v_, e)); }
    FieldElement frobenius() const { return wrap(field_->frobenius(v_)); }

    bool operator==(const FieldElement& o) const { return v_ == check(o); }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const { return field_->to_string(v_); }

  private:
    FieldPtr field_;
    Elem v_ = 0;

    FieldElement wrap(Elem v) const { return FieldElement(field_, v); }
    Elem check(const FieldElement& o) const {
        if (!field_ || !o.field_ || !field_->same_field(*o.field_)) throw MixedFields();
        return o.v_;
    }
};

/// All q elements in coefficient-vector order (packed index 0..q-1).
std::vector<FieldElement> enumerate(const FieldPtr& field);

/// Subfield embedding determined by the first root of the source modulus in
/// target enumeration order.
class Embedding {
  public:
    Embedding(FieldPtr source, FieldPtr target, Elem generator_image);

    const FieldPtr& source() const { return src_; }
    const FieldPtr& target() const { return tgt_; }
    Elem generator_image() const { return img_; }

    Elem apply_raw(Elem x) const;
    FieldElement apply(const FieldElement& x) const;

  private:
    FieldPtr src_, tgt_;
    Elem img_;
    std::vector<Elem> img_pow_;  // img^0 .. img^{src m - 1}
};

/// Throws NoEmbedding unless p matches and source degree divides target degree.
Embedding embed(const FieldPtr& source, const FieldPtr& target);

}  // namespace lw
