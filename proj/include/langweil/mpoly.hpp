#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "langweil/gf.hpp"

namespace lw {

using ExpVec = std::vector<std::uint32_t>;

/// Graded-lexicographic order on exponent vectors (total degree first, then
/// lexicographic with the first variable most significant).
struct GradedLex {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over a fixed field.  No zero coefficients
/// are stored; the zero polynomial has an empty term map and its total degree
/// is the nullopt sentinel.
class MultiPoly {
  public:
    MultiPoly() = default;
    MultiPoly(FieldPtr field, int nvars);

    static MultiPoly zero(FieldPtr field, int nvars) { return MultiPoly(std::move(field), nvars); }
    static MultiPoly constant(FieldPtr field, int nvars, Elem c);
    static MultiPoly variable(FieldPtr field, int nvars, int index);

    const FieldPtr& field() const { return field_; }
    int nvars() const { return nvars_; }
    const std::map<ExpVec, Elem, GradedLex>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::optional<int> total_degree() const;
    int degree_in(int var) const;  // -1 for zero polynomial
    bool is_homogeneous() const;

    void add_term(const ExpVec& e, Elem c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(Elem c) const;
    bool operator==(const MultiPoly& o) const;

    Elem evaluate(const std::vector<Elem>& point) const;
    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    /// Substitute each variable by a polynomial over the same field (in a
    /// possibly different number of variables).
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    /// Leading coefficient in graded-lex order; zero for the zero polynomial.
    Elem leading_coefficient() const;

    std::string str() const;

  private:
    FieldPtr field_;
    int nvars_ = 0;
    std::map<ExpVec, Elem, GradedLex> terms_;

    void check_compatible(const MultiPoly& o) const;
};

/// Parses the polynomial grammar: terms joined by +/-; a term is
/// [coeff][*][var[^exp]]...; variables x1..xN with aliases x,y,z,w for N <= 4;
/// coefficients are integers (reduced mod p) or parenthesized extension
/// elements such as (t+1).
MultiPoly parse_poly(const std::string& text, int nvars, const FieldPtr& field);

MultiPoly homogenize(const MultiPoly& f, int newvar_index);
MultiPoly dehomogenize(const MultiPoly& f, int chart_index);  // throws NotHomogeneous

MultiPoly map_coefficients(const MultiPoly& f, const Embedding& e);

enum class Setting { affine, projective };

inline const char* setting_name(Setting s) { return s == Setting::affine ? "affine" : "projective"; }

/// Degree-d hypersurface {f = 0} in A^n (f in n variables) or P^n
/// (f homogeneous in n+1 variables).
struct Hypersurface {
    int ambient_dim;  // n
    Setting setting;
    MultiPoly f;
    int degree;

    static Hypersurface affine(int n, MultiPoly f);
    static Hypersurface projective(int n, MultiPoly f);  // throws NotHomogeneous
};

struct PlaneFrame;  // see plane.hpp

/// Restriction of the defining polynomial to a plane.  Affine planes yield a
/// bivariate polynomial in the parameters (s, w); projective planes yield a
/// homogeneous trivariate form on the span coordinates.  The result is
/// identically zero exactly when the plane lies inside the hypersurface.
MultiPoly restrict_to_plane(const Hypersurface& X, const PlaneFrame& H);

}  // namespace lw
