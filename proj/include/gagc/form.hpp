/*
   Copyright 2026 the gagc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GAGC_FORM_HPP
#define GAGC_FORM_HPP

#include <array>
#include <cctype>

#include "poly.hpp"

namespace gagc {

/// Monomial x^a y^b z^c.
struct Mono {
    std::uint16_t a = 0, b = 0, c = 0;
    unsigned total() const { return a + b + c; }
    bool divides(const Mono& o) const { return a <= o.a && b <= o.b && c <= o.c; }
    bool operator==(const Mono& o) const { return a == o.a && b == o.b && c == o.c; }
};

/// Lexicographic order with y > z > x: the reduction order used for curve
/// normal forms. Returns true when l < r.
inline bool mono_less(const Mono& l, const Mono& r) {
    if (l.b != r.b) return l.b < r.b;
    if (l.c != r.c) return l.c < r.c;
    return l.a < r.a;
}

/// Homogeneous trivariate polynomial over F_q (coefficients as indices).
class Form {
   public:
    explicit Form(const Field* k) : k_(k) {}
    Form(const Field* k, std::vector<std::pair<Mono, fidx>> terms) : k_(k) {
        for (auto& [m, c] : terms)
            if (c) add_term(m, c);
        normalize();
    }

    const Field* field() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    unsigned degree() const {
        if (terms_.empty()) throw std::domain_error("zero form has no degree");
        return terms_[0].first.total();
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const unsigned d = terms_[0].first.total();
        return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.total() == d; });
    }
    const std::vector<std::pair<Mono, fidx>>& terms() const { return terms_; }

    fidx coeff_of(const Mono& m) const {
        for (const auto& [mm, c] : terms_)
            if (mm == m) return c;
        return 0;
    }

    /// Largest monomial under the y > z > x lexicographic order.
    Mono leading_mono() const {
        if (terms_.empty()) throw std::domain_error("zero form");
        return terms_.front().first;
    }

    Form operator+(const Form& o) const {
        Form r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        r.normalize();
        return r;
    }
    Form scaled(fidx s) const {
        Form r(k_);
        if (!s) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, k_->mul(c, s));
        return r;
    }
    Form operator*(const Form& o) const {
        Form r(k_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : o.terms_)
                r.add_term({static_cast<std::uint16_t>(m1.a + m2.a), static_cast<std::uint16_t>(m1.b + m2.b),
                            static_cast<std::uint16_t>(m1.c + m2.c)},
                           k_->mul(c1, c2));
        r.normalize();
        return r;
    }
    bool operator==(const Form& o) const { return k_ == o.k_ && terms_ == o.terms_; }

    /// Formal partial derivative with respect to variable 0=x, 1=y, 2=z.
    Form partial(int var) const {
        Form r(k_);
        for (const auto& [m, c] : terms_) {
            unsigned e = var == 0 ? m.a : var == 1 ? m.b : m.c;
            if (e == 0) continue;
            fidx nc = 0;
            for (unsigned i = 0; i < e % k_->characteristic(); ++i) nc = k_->add(nc, c);
            if (!nc) continue;
            Mono nm = m;
            if (var == 0)
                --nm.a;
            else if (var == 1)
                --nm.b;
            else
                --nm.c;
            r.add_term(nm, nc);
        }
        r.normalize();
        return r;
    }

    /// Evaluation at a projective point with coordinates in an extension K.
    cvec eval(const Field* K, const cvec& x, const cvec& y, const cvec& z) const {
        unsigned dmax_a = 0, dmax_b = 0, dmax_c = 0;
        for (const auto& [m, c] : terms_) {
            dmax_a = std::max<unsigned>(dmax_a, m.a);
            dmax_b = std::max<unsigned>(dmax_b, m.b);
            dmax_c = std::max<unsigned>(dmax_c, m.c);
        }
        auto powers = [&](const cvec& v, unsigned n) {
            std::vector<cvec> p(n + 1, K->one());
            for (unsigned i = 1; i <= n; ++i) p[i] = K->v_mul(p[i - 1], v);
            return p;
        };
        auto px = powers(x, dmax_a), py = powers(y, dmax_b), pz = powers(z, dmax_c);
        cvec acc = K->zero();
        for (const auto& [m, c] : terms_) {
            cvec t = embed_up(Element(k_, k_->decode(c)), K).coeffs();
            t = K->v_mul(t, px[m.a]);
            t = K->v_mul(t, py[m.b]);
            t = K->v_mul(t, pz[m.c]);
            acc = K->v_add(acc, t);
        }
        return acc;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first_term = true;
        for (const auto& [m, c] : terms_) {
            if (!first_term) os << " + ";
            first_term = false;
            bool need_sep = false;
            if (c != 1 || m.total() == 0) {
                os << c;
                need_sep = true;
            }
            auto var = [&](const char* n, unsigned e) {
                if (!e) return;
                if (need_sep) os << "*";
                os << n;
                if (e > 1) os << "^" << e;
                need_sep = true;
            };
            var("x", m.a);
            var("y", m.b);
            var("z", m.c);
        }
        return os.str();
    }

   private:
    void add_term(const Mono& m, fidx c) {
        for (auto& [mm, cc] : terms_) {
            if (mm == m) {
                cc = k_->add(cc, c);
                return;
            }
        }
        terms_.emplace_back(m, c);
    }
    void normalize() {
        terms_.erase(std::remove_if(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 0; }), terms_.end());
        std::sort(terms_.begin(), terms_.end(), [](const auto& l, const auto& r) { return mono_less(r.first, l.first); });
    }
    const Field* k_;
    std::vector<std::pair<Mono, fidx>> terms_;  // sorted descending in the y>z>x order
};

/// Bivariate polynomial over F_q: rows_[j] is the coefficient of y^j as a
/// univariate polynomial in x.
class BiPoly {
   public:
    explicit BiPoly(const Field* k) : k_(k) {}
    BiPoly(const Field* k, std::vector<UniPoly> rows) : k_(k), rows_(std::move(rows)) { trim(); }

    const Field* field() const { return k_; }
    bool is_zero() const { return rows_.empty(); }
    int deg_y() const { return static_cast<int>(rows_.size()) - 1; }
    int deg_x() const {
        int d = -1;
        for (const auto& r : rows_) d = std::max(d, r.degree());
        return d;
    }
    const UniPoly& row(std::size_t j) const { return rows_[j]; }
    const UniPoly& lc_y() const { return rows_.back(); }

    /// Specialize x = a (a in an extension K); returns the univariate in y over K.
    UniPoly eval_x(const Field* K, const cvec& a) const {
        std::vector<cvec> c;
        c.reserve(rows_.size());
        for (const auto& r : rows_) c.push_back(r.lift_to(K).eval(a));
        return UniPoly(K, std::move(c));
    }

    /// Specialize y = b; returns the univariate in x over K.
    UniPoly eval_y(const Field* K, const cvec& b) const {
        UniPoly acc = UniPoly::zero(K);
        cvec p = K->one();
        for (const auto& r : rows_) {
            acc = acc + r.lift_to(K).scaled(p);
            p = K->v_mul(p, b);
        }
        return acc;
    }

    cvec eval(const Field* K, const cvec& a, const cvec& b) const { return eval_x(K, a).eval(b); }

    /// Partial derivatives.
    BiPoly d_dx() const {
        std::vector<UniPoly> r;
        r.reserve(rows_.size());
        for (const auto& row : rows_) r.push_back(row.derivative());
        return BiPoly(k_, std::move(r));
    }
    BiPoly d_dy() const {
        std::vector<UniPoly> r;
        for (std::size_t j = 1; j < rows_.size(); ++j) {
            UniPoly acc = UniPoly::zero(k_);
            unsigned mult = static_cast<unsigned>(j % k_->characteristic());
            for (unsigned i = 0; i < mult; ++i) acc = acc + rows_[j];
            r.push_back(acc);
        }
        return BiPoly(k_, std::move(r));
    }

   private:
    void trim() {
        while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
    }
    const Field* k_;
    std::vector<UniPoly> rows_;
};

/// Dehomogenize a form by setting one projective coordinate to 1.
/// The remaining two coordinates map to the BiPoly variables:
///   chart=2 (z=1): (x, y) -> (x, y)
///   chart=1 (y=1): (x, z) -> (x, y)
///   chart=0 (x=1): (y, z) -> (x, y)
inline BiPoly dehomogenize(const Form& f, int chart) {
    const Field* k = f.field();
    std::vector<std::vector<cvec>> grid;  // [y][x]
    for (const auto& [m, c] : f.terms()) {
        unsigned ex, ey;
        if (chart == 2) {
            ex = m.a;
            ey = m.b;
        } else if (chart == 1) {
            ex = m.a;
            ey = m.c;
        } else {
            ex = m.b;
            ey = m.c;
        }
        if (grid.size() <= ey) grid.resize(ey + 1);
        auto& row = grid[ey];
        if (row.size() <= ex) row.resize(ex + 1, k->zero());
        row[ex] = k->v_add(row[ex], k->decode(c));
    }
    std::vector<UniPoly> rows;
    rows.reserve(grid.size());
    for (auto& row : grid) rows.emplace_back(k, std::move(row));
    return BiPoly(k, std::move(rows));
}

/// Univariate resultant via the Euclidean algorithm.
inline cvec resultant_uni(UniPoly f, UniPoly g) {
    const Field* k = f.field();
    if (f.is_zero() || g.is_zero()) return k->zero();
    cvec res = k->one();
    bool negate = false;
    while (g.degree() > 0) {
        UniPoly rem = f % g;
        if (rem.is_zero()) return k->zero();
        const int df = f.degree(), dg = g.degree(), dr = rem.degree();
        if ((df & 1) && (dg & 1)) negate = !negate;
        res = k->v_mul(res, k->v_pow(g.lc(), static_cast<std::uint64_t>(df - dr)));
        f = std::move(g);
        g = std::move(rem);
    }
    // g is a nonzero constant
    res = k->v_mul(res, k->v_pow(g.coeff(0), static_cast<std::uint64_t>(f.degree())));
    if (negate) res = k->v_neg(res);
    return res;
}

/// Resultant with respect to y, computed by specializing x at enough points
/// (drawn from an extension when the coefficient field is too small) and
/// interpolating. Vanishes exactly at x-coordinates of common zeros (or
/// where both leading y-coefficients collapse).
inline UniPoly resultant_y(const BiPoly& F, const BiPoly& G) {
    const Field* k = F.field();
    if (F.is_zero() || G.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
    if (F.deg_y() == 0) {
        UniPoly base = F.row(0);
        UniPoly r = UniPoly::one(k);
        for (int i = 0; i < G.deg_y(); ++i) r = r * base;
        return r;
    }
    if (G.deg_y() == 0) {
        UniPoly base = G.row(0);
        UniPoly r = UniPoly::one(k);
        for (int i = 0; i < F.deg_y(); ++i) r = r * base;
        return r;
    }
    const unsigned bound = static_cast<unsigned>(F.deg_y() * std::max(G.deg_x(), 0) + G.deg_y() * std::max(F.deg_x(), 0));
    const unsigned skip_max = static_cast<unsigned>(std::max(F.lc_y().degree(), 0) + std::max(G.lc_y().degree(), 0));

    const Field* K = k;
    unsigned ext = 1;
    while (!K->size_fits() || K->size() < static_cast<std::uint64_t>(bound) + skip_max + 2) {
        ++ext;
        K = Field::extension(k, ext);
    }
    std::vector<cvec> pts, vals;
    pts.reserve(bound + 1);
    UniPoly lcF = F.lc_y().lift_to(K), lcG = G.lc_y().lift_to(K);
    for (std::uint64_t i = 0; pts.size() <= bound; ++i) {
        if (i >= K->size()) throw std::runtime_error("not enough evaluation points for the resultant");
        cvec a = K->decode(i);
        if (K->v_is_zero(lcF.eval(a)) || K->v_is_zero(lcG.eval(a))) continue;
        cvec r = resultant_uni(F.eval_x(K, a), G.eval_x(K, a));
        pts.push_back(std::move(a));
        vals.push_back(std::move(r));
    }
    UniPoly R = interpolate(K, pts, vals);
    if (K == k) return R;
    // project the coefficients back down the tower
    std::vector<cvec> coeffs;
    for (int i = 0; i <= R.degree(); ++i) {
        Element e(K, R.coeff(i));
        while (e.field() != k) e = project_down(e);
        coeffs.push_back(e.coeffs());
    }
    return UniPoly(k, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// polynomial text parser
// ---------------------------------------------------------------------------

namespace detail {

struct PolyParser {
    const Field* k;
    std::vector<std::string> vars;
    std::string s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_factor() {
        skip();
        if (pos >= s.size()) return false;
        char c = s[pos];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
    }

    using Term = std::map<std::array<unsigned, 3>, fidx>;

    unsigned parse_uint() {
        skip();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) throw std::invalid_argument("expected integer in polynomial");
        unsigned long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + (s[pos++] - '0');
        return static_cast<unsigned>(v);
    }

    // factor := INT | VAR ('^' INT)?
    void parse_factor(std::array<unsigned, 3>& exps, fidx& coeff) {
        skip();
        if (pos >= s.size()) throw std::invalid_argument("unexpected end of polynomial");
        if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
            unsigned v = parse_uint();
            if (!k->size_fits() || v >= k->size()) throw std::invalid_argument("coefficient code out of field range");
            coeff = k->mul(coeff, static_cast<fidx>(v));
            return;
        }
        // variable name: longest match
        for (std::size_t vi = 0; vi < vars.size(); ++vi) {
            const auto& name = vars[vi];
            if (s.compare(pos, name.size(), name) == 0) {
                pos += name.size();
                unsigned e = 1;
                if (eat('^')) e = parse_uint();
                exps[vi] += e;
                return;
            }
        }
        throw std::invalid_argument("unknown symbol in polynomial: '" + s.substr(pos, 1) + "'");
    }

    void parse(Term& out) {
        bool first = true;
        for (;;) {
            skip();
            bool neg = false;
            if (first) {
                if (eat('-')) neg = true;
                first = false;
            } else if (pos >= s.size()) {
                break;
            } else if (eat('+')) {
            } else if (eat('-')) {
                neg = true;
            } else {
                throw std::invalid_argument("expected '+' or '-' in polynomial");
            }
            std::array<unsigned, 3> exps{0, 0, 0};
            fidx coeff = 1;
            parse_factor(exps, coeff);
            for (;;) {
                skip();
                if (eat('*')) {
                    parse_factor(exps, coeff);
                } else if (peek_factor()) {
                    parse_factor(exps, coeff);
                } else {
                    break;
                }
            }
            if (neg) coeff = k->neg(coeff);
            auto it = out.find(exps);
            fidx cur = it == out.end() ? 0 : it->second;
            out[exps] = k->add(cur, coeff);
        }
    }
};

}  // namespace detail

/// Parse a polynomial in up to three named variables; integer literals are
/// element codes in the coefficient field's canonical encoding.
inline Form parse_form(const Field* k, const std::string& text) {
    detail::PolyParser p{k, {"x", "y", "z"}, text};
    detail::PolyParser::Term t;
    p.parse(t);
    std::vector<std::pair<Mono, fidx>> terms;
    for (const auto& [e, c] : t) {
        if (!c) continue;
        if (e[0] > 4000 || e[1] > 4000 || e[2] > 4000) throw std::invalid_argument("exponent too large");
        terms.push_back({Mono{static_cast<std::uint16_t>(e[0]), static_cast<std::uint16_t>(e[1]), static_cast<std::uint16_t>(e[2])}, c});
    }
    return Form(k, std::move(terms));
}

inline UniPoly parse_unipoly(const Field* k, const std::string& text, const std::string& var = "x") {
    detail::PolyParser p{k, {var}, text};
    detail::PolyParser::Term t;
    p.parse(t);
    UniPoly f = UniPoly::zero(k);
    for (const auto& [e, c] : t) {
        if (!c) continue;
        f = f + UniPoly::monomial(k, e[0], k->decode(c));
    }
    return f;
}

}  // namespace gagc

#endif
