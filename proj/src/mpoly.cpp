#include "langweil/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "langweil/plane.hpp"

namespace lw {

bool GradedLex::operator()(const ExpVec& a, const ExpVec& b) const {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    // Same degree: lexicographic, first variable most significant.  The
    // graded-lex-larger monomial is the one with the lexicographically larger
    // exponent vector.
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(FieldPtr field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars_ < 1) throw ArityMismatch("polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(FieldPtr field, int nvars, Elem c) {
    MultiPoly p(std::move(field), nvars);
    if (c) p.terms_.emplace(ExpVec(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(FieldPtr field, int nvars, int index) {
    if (index < 0 || index >= nvars) throw ArityMismatch("variable index out of range");
    MultiPoly p(field, nvars);
    ExpVec e(nvars, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), field->one());
    return p;
}

std::optional<int> MultiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    // Graded-lex: the map's last key has maximal total degree.
    const ExpVec& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint32_t{0}));
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    auto deg = [](const ExpVec& e) {
        return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
    };
    std::uint32_t d = deg(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (deg(e) != d) return false;
    return true;
}

void MultiPoly::add_term(const ExpVec& e, Elem c) {
    if (static_cast<int>(e.size()) != nvars_) throw ArityMismatch("exponent vector arity mismatch");
    if (!c) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = field_->add(it->second, c);
        if (!it->second) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (!field_ || !o.field_ || !field_->same_field(*o.field_)) throw MixedFields();
    if (nvars_ != o.nvars_) throw ArityMismatch("polynomial arity mismatch");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, field_->neg(c));
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(field_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_->neg(c));
    return r;
}

MultiPoly MultiPoly::scaled(Elem s) const {
    MultiPoly r(field_, nvars_);
    if (!s) return r;
    for (const auto& [e, c] : terms_) {
        Elem v = field_->mul(c, s);
        if (v) r.terms_.emplace(e, v);
    }
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    MultiPoly r(field_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, field_->mul(ca, cb));
        }
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return field_.get() == o.field_.get() && nvars_ == o.nvars_ && terms_ == o.terms_;
}

Elem MultiPoly::evaluate(const std::vector<Elem>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw ArityMismatch("evaluation point arity mismatch");
    Elem acc = 0;
    for (const auto& [e, c] : terms_) {
        Elem t = c;
        for (int i = 0; i < nvars_ && t; ++i)
            if (e[i]) t = field_->mul(t, field_->pow(point[i], e[i]));
        acc = field_->add(acc, t);
    }
    return acc;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
    std::vector<Elem> raw;
    raw.reserve(point.size());
    for (const auto& x : point) {
        if (!x.field() || !x.field()->same_field(*field_)) throw MixedFields();
        raw.push_back(x.value());
    }
    return FieldElement(field_, evaluate(raw));
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_) throw ArityMismatch("substitution arity mismatch");
    for (const auto& g : images) {
        if (!g.field() || !g.field()->same_field(*field_)) throw MixedFields();
        if (g.nvars() != images[0].nvars()) throw ArityMismatch("inconsistent substitution arity");
    }
    int out_vars = images[0].nvars();
    MultiPoly acc(field_, out_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(field_, out_vars, c);
        for (int i = 0; i < nvars_; ++i)
            for (std::uint32_t k = 0; k < e[i]; ++k) t = t * images[i];
        acc = acc + t;
    }
    return acc;
}

Elem MultiPoly::leading_coefficient() const {
    return terms_.empty() ? 0 : terms_.rbegin()->second;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool ext = field_->m() > 1;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) out << "+";
        first = false;
        bool has_vars =
            std::any_of(e.begin(), e.end(), [](std::uint32_t x) { return x > 0; });
        bool coeff_is_one = (c == field_->one());
        std::string coeff_txt =
            ext ? "(" + field_->to_string(c) + ")" : field_->to_string(c);
        bool wrote_coeff = false;
        if (!has_vars || !coeff_is_one) {
            out << coeff_txt;
            wrote_coeff = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (wrote_coeff) out << "*";
            wrote_coeff = true;
            out << "x" << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

namespace {

class PolyParser {
  public:
    PolyParser(const std::string& text, int nvars, FieldPtr field)
        : text_(text), nvars_(nvars), field_(std::move(field)) {}

    MultiPoly parse() {
        MultiPoly acc(field_, nvars_);
        skip_ws();
        bool first = true;
        while (pos_ < text_.size()) {
            bool negate = false;
            if (peek() == '+' || peek() == '-') {
                negate = peek() == '-';
                ++pos_;
                skip_ws();
            } else if (!first) {
                throw ParseError("expected '+' or '-'", pos_);
            }
            MultiPoly term = parse_term();
            acc = negate ? acc - term : acc + term;
            first = false;
            skip_ws();
        }
        if (first) throw ParseError("empty polynomial", 0);
        return acc;
    }

  private:
    const std::string& text_;
    int nvars_;
    FieldPtr field_;
    std::size_t pos_ = 0;

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_factor_start() const {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'y' ||
               c == 'z' || c == 'w';
    }

    MultiPoly parse_term() {
        MultiPoly acc = MultiPoly::constant(field_, nvars_, field_->one());
        bool any = false;
        while (true) {
            skip_ws();
            if (!at_factor_start()) break;
            acc = acc * parse_factor();
            any = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (!at_factor_start()) throw ParseError("expected factor after '*'", pos_);
            }
        }
        if (!any) throw ParseError("expected term", pos_);
        return acc;
    }

    MultiPoly parse_factor() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                v = v * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            return MultiPoly::constant(field_, nvars_, field_->from_int(v));
        }
        if (c == '(') {
            std::size_t open = pos_;
            int depth = 0;
            std::size_t end = pos_;
            for (; end < text_.size(); ++end) {
                if (text_[end] == '(') ++depth;
                if (text_[end] == ')' && --depth == 0) break;
            }
            if (end >= text_.size()) throw ParseError("unbalanced parenthesis", open);
            std::string inner = text_.substr(open + 1, end - open - 1);
            pos_ = end + 1;
            return MultiPoly::constant(field_, nvars_, field_->parse_element(inner));
        }
        // Variable.
        int index = -1;
        if (c == 'x' && pos_ + 1 < text_.size() &&
            std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            int idx = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                idx = idx * 10 + (text_[pos_] - '0');
                ++pos_;
            }
            index = idx - 1;
        } else if (c == 'x' || c == 'y' || c == 'z' || c == 'w') {
            if (nvars_ > 4) throw ParseError("aliases x,y,z,w need at most 4 variables", pos_);
            index = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : 3;
            ++pos_;
        } else {
            throw ParseError("expected factor", pos_);
        }
        if (index < 0 || index >= nvars_) throw ParseError("variable index out of range", pos_);
        std::uint32_t exp = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw ParseError("expected exponent", pos_);
            exp = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                exp = exp * 10 + static_cast<std::uint32_t>(text_[pos_] - '0');
                ++pos_;
            }
        }
        MultiPoly v = MultiPoly::variable(field_, nvars_, index);
        MultiPoly acc = MultiPoly::constant(field_, nvars_, field_->one());
        for (std::uint32_t k = 0; k < exp; ++k) acc = acc * v;
        return acc;
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, int nvars, const FieldPtr& field) {
    return PolyParser(text, nvars, field).parse();
}

MultiPoly homogenize(const MultiPoly& f, int newvar_index) {
    int n = f.nvars();
    if (newvar_index < 0 || newvar_index > n) throw ArityMismatch("homogenization index out of range");
    MultiPoly out(f.field(), n + 1);
    auto d = f.total_degree();
    if (!d) return out;
    for (const auto& [e, c] : f.terms()) {
        std::uint32_t sum = std::accumulate(e.begin(), e.end(), std::uint32_t{0});
        ExpVec ne(e);
        ne.insert(ne.begin() + newvar_index, static_cast<std::uint32_t>(*d) - sum);
        out.add_term(ne, c);
    }
    return out;
}

MultiPoly dehomogenize(const MultiPoly& f, int chart_index) {
    if (!f.is_homogeneous()) throw NotHomogeneous("dehomogenize requires homogeneous input");
    int n = f.nvars();
    if (n < 2) throw ArityMismatch("dehomogenize needs at least two variables");
    if (chart_index < 0 || chart_index >= n) throw ArityMismatch("chart index out of range");
    MultiPoly out(f.field(), n - 1);
    for (const auto& [e, c] : f.terms()) {
        ExpVec ne(e);
        ne.erase(ne.begin() + chart_index);
        out.add_term(ne, c);
    }
    return out;
}

MultiPoly map_coefficients(const MultiPoly& f, const Embedding& e) {
    if (!f.field() || !f.field()->same_field(*e.source())) throw MixedFields();
    MultiPoly out(e.target(), f.nvars());
    for (const auto& [exps, c] : f.terms()) out.add_term(exps, e.apply_raw(c));
    return out;
}

Hypersurface Hypersurface::affine(int n, MultiPoly f) {
    if (f.nvars() != n) throw ArityMismatch("affine hypersurface needs f in n variables");
    auto d = f.total_degree();
    if (!d || *d < 1) throw Error("affine hypersurface needs a nonconstant polynomial");
    return Hypersurface{n, Setting::affine, std::move(f), *d};
}

Hypersurface Hypersurface::projective(int n, MultiPoly f) {
    if (f.nvars() != n + 1) throw ArityMismatch("projective hypersurface needs f in n+1 variables");
    if (f.is_zero() || !f.is_homogeneous())
        throw NotHomogeneous("projective hypersurface needs a nonzero homogeneous form");
    int d = *f.total_degree();
    return Hypersurface{n, Setting::projective, std::move(f), d};
}

MultiPoly restrict_to_plane(const Hypersurface& X, const PlaneFrame& H) {
    if (H.setting != X.setting || H.n != X.ambient_dim)
        throw DimensionMismatch("plane does not match the hypersurface's ambient space");
    const FieldPtr& field = X.f.field();
    if (X.setting == Setting::affine) {
        if (H.rows.size() != 2 || static_cast<int>(H.base.size()) != X.ambient_dim)
            throw DimensionMismatch("malformed affine plane frame");
        std::vector<MultiPoly> images;
        images.reserve(X.ambient_dim);
        for (int i = 0; i < X.ambient_dim; ++i) {
            MultiPoly img = MultiPoly::constant(field, 2, H.base[i]);
            img = img + MultiPoly::variable(field, 2, 0).scaled(H.rows[0][i]);
            img = img + MultiPoly::variable(field, 2, 1).scaled(H.rows[1][i]);
            images.push_back(std::move(img));
        }
        return X.f.substitute(images);
    }
    if (H.rows.size() != 3) throw DimensionMismatch("malformed projective plane frame");
    std::vector<MultiPoly> images;
    images.reserve(X.ambient_dim + 1);
    for (int j = 0; j <= X.ambient_dim; ++j) {
        MultiPoly img(field, 3);
        for (int r = 0; r < 3; ++r)
            img = img + MultiPoly::variable(field, 3, r).scaled(H.rows[r][j]);
        images.push_back(std::move(img));
    }
    return X.f.substitute(images);
}

}  // namespace lw
