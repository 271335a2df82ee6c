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

#ifndef GAGC_CURVE_HPP
#define GAGC_CURVE_HPP

#include "form.hpp"

namespace gagc {

/// Decides whether the projective plane curve F = 0 is non-singular over the
/// algebraic closure: resultant elimination against the partials plus root
/// search over the needed extensions. A reducible or non-reduced curve is
/// reported singular (components of a plane curve always intersect).
inline bool smoothness_check(const Field* fq, const Form& F);

/// Genus of y^n = f(x) (tame: gcd(n, q) = 1) over the rational function
/// field, by Riemann-Hurwitz. Ramification is read off the valuations of f
/// at its zeroes and at infinity.
inline unsigned kummer_genus(const Field* fq, unsigned n, const UniPoly& f);

struct Curve {
    enum class Model { planar_smooth, kummer_cover };

    const Field* fq = nullptr;
    Model model = Model::planar_smooth;
    Form poly;            // planar model (homogeneous, smooth)
    unsigned kummer_n = 0;
    UniPoly kummer_f;     // kummer model y^n = f(x)
    unsigned genus = 0;
    std::string label;

    Curve() : poly(nullptr), kummer_f(nullptr) {}

    bool is_planar() const { return model == Model::planar_smooth; }
    unsigned plane_degree() const { return poly.degree(); }

    std::string signature() const {
        std::ostringstream os;
        os << fq->describe() << "|";
        if (is_planar())
            os << "planar " << poly.to_string();
        else
            os << "kummer n=" << kummer_n << " f=" << kummer_f.to_string();
        return os.str();
    }

    /// True when the model is x^(q0+1) = y^q0 + y over F_{q0^2}
    /// (projectively x^(q0+1) + y^q0 z + y z^q0); fills q0.
    bool hermitian_shape(unsigned& q0) const {
        if (!is_planar()) return false;
        const unsigned d = poly.degree();
        if (d < 3) return false;
        q0 = d - 1;
        if (!fq->size_fits() || fq->size() != static_cast<std::uint64_t>(q0) * q0) return false;
        Form expect(fq, {{Mono{static_cast<std::uint16_t>(q0 + 1), 0, 0}, 1},
                         {Mono{0, static_cast<std::uint16_t>(q0), 1}, 1},
                         {Mono{0, 1, static_cast<std::uint16_t>(q0)}, 1}});
        return poly == expect;
    }
};

using CurvePtr = std::shared_ptr<const Curve>;

// ---------------------------------------------------------------------------
// smoothness
// ---------------------------------------------------------------------------

namespace detail {

/// F(x + lambda*y, y, z), computed term by term.
inline Form shear_x_by_y(const Form& F, const Field* k, const cvec& lambda) {
    // build over k (F's field embeds into k)
    Form x_plus_ly(k, {{Mono{1, 0, 0}, 1}});
    if (!k->v_is_zero(lambda)) {
        Form ly(k, {{Mono{0, 1, 0}, static_cast<fidx>(k->encode(lambda))}});
        x_plus_ly = x_plus_ly + ly;
    }
    Form out(k);
    for (const auto& [m, c] : F.terms()) {
        Element ce = embed_up(Element(F.field(), F.field()->decode(c)), k);
        Form term(k, {{Mono{0, m.b, m.c}, static_cast<fidx>(ce.code())}});
        for (unsigned i = 0; i < m.a; ++i) term = term * x_plus_ly;
        out = out + term;
    }
    return out;
}

inline UniPoly restrict_to_infinity(const Form& F, const Field* k) {
    // F(T, 1, 0) as a univariate in T
    UniPoly out = UniPoly::zero(k);
    for (const auto& [m, c] : F.terms()) {
        if (m.c != 0) continue;
        out = out + UniPoly::monomial(k, m.a, k->decode(c));
    }
    return out;
}

}  // namespace detail

inline bool smoothness_check(const Field* fq, const Form& F) {
    if (F.is_zero()) throw std::invalid_argument("zero polynomial does not define a curve");
    if (!F.is_homogeneous()) throw std::invalid_argument("curve polynomial must be homogeneous");
    const unsigned d = F.degree();
    if (d == 0) throw std::invalid_argument("constant polynomial does not define a curve");
    if (d == 1) return true;

    // non-reduced curves (all partials zero) are singular everywhere
    if (F.partial(0).is_zero() && F.partial(1).is_zero() && F.partial(2).is_zero()) return false;

    // regularize: find a shear x -> x + lambda*y making the y^d coefficient
    // nonzero, extending scalars if the base field is too small
    const Field* k = fq;
    cvec lambda = fq->zero();
    bool found = false;
    for (unsigned ext = 1; ext <= 3 && !found; ++ext) {
        k = ext == 1 ? fq : Field::extension(fq, ext);
        UniPoly top = detail::restrict_to_infinity(F, fq).lift_to(k);  // F(T,1,0)
        if (top.is_zero()) return false;                               // z divides F: reducible
        for (std::uint64_t i = 0; i < k->size(); ++i) {
            cvec cand = k->decode(i);
            if (!k->v_is_zero(top.eval(cand))) {
                lambda = cand;
                found = true;
                break;
            }
        }
    }
    if (!found) throw std::runtime_error("could not regularize the curve model");

    const Form G = detail::shear_x_by_y(F, k, lambda);
    const Form partials[3] = {G.partial(0), G.partial(1), G.partial(2)};

    // ---- affine chart z = 1 ----
    BiPoly f = dehomogenize(G, 2);
    std::vector<BiPoly> parts;
    for (const auto& P : partials)
        if (!P.is_zero()) parts.push_back(dehomogenize(P, 2));

    UniPoly xcond = UniPoly::zero(k);  // gcd of elimination conditions; zero means "no condition yet"
    bool have_cond = false;
    std::vector<const BiPoly*> y_parts;
    for (const auto& h : parts) {
        if (h.is_zero()) continue;
        UniPoly r(k);
        if (h.deg_y() > 0) {
            r = resultant_y(f, h);
            if (r.is_zero()) return false;  // common component with a partial: singular
            y_parts.push_back(&h);
        } else {
            r = h.row(0);
        }
        xcond = have_cond ? gcd(xcond, r) : r.monic();
        have_cond = true;
    }
    if (!have_cond) return false;

    if (xcond.degree() > 0) {
        for (const auto& [pfac, mult] : factor(xcond)) {
            (void)mult;
            const Field* L = Field::extension(k, static_cast<unsigned>(pfac.degree()));
            cvec x0 = roots_in(pfac, L).front().first;
            UniPoly gy = f.eval_x(L, x0);
            bool possible = true;
            for (const auto& h : parts) {
                UniPoly hy = h.eval_x(L, x0);
                if (h.deg_y() > 0) {
                    gy = gcd(gy, hy);
                } else if (!hy.is_zero()) {
                    possible = false;
                    break;
                }
                if (gy.degree() < 1 && !gy.is_zero()) {
                    possible = false;
                    break;
                }
            }
            if (possible && (gy.is_zero() || gy.degree() >= 1)) return false;
        }
    }

    // ---- line z = 0, points (x0 : 1 : 0) ----
    UniPoly a = detail::restrict_to_infinity(G, k);
    if (a.is_zero()) return false;
    UniPoly g = a.monic();
    for (const auto& P : partials) {
        if (P.is_zero()) continue;
        UniPoly pr = detail::restrict_to_infinity(P, k);
        if (pr.is_zero()) continue;
        g = gcd(g, pr);
    }
    if (g.degree() >= 1) return false;

    // ---- the point (1 : 0 : 0) ----
    auto at100 = [&](const Form& H) {
        if (H.is_zero()) return true;  // vanishes trivially
        return k->v_is_zero(dehomogenize(H, 0).eval(k, k->zero(), k->zero()));
    };
    if (at100(G) && at100(partials[0]) && at100(partials[1]) && at100(partials[2])) return false;

    return true;
}

// ---------------------------------------------------------------------------
// kummer genus
// ---------------------------------------------------------------------------

inline unsigned kummer_genus(const Field* fq, unsigned n, const UniPoly& f) {
    if (n < 2) throw std::invalid_argument("kummer exponent must be at least 2");
    if (std::gcd<std::uint64_t>(n, fq->size()) != 1) throw std::invalid_argument("wild ramification: gcd(n, q) must be 1");
    if (f.is_zero()) throw std::invalid_argument("kummer model requires f != 0");

    // valuations of f at its zeroes, plus the infinite place
    std::vector<std::pair<unsigned, long>> val;  // (deg of place, valuation)
    if (f.degree() >= 1)
        for (const auto& [p, m] : factor(f)) val.emplace_back(static_cast<unsigned>(p.degree()), m);
    val.emplace_back(1u, -static_cast<long>(f.degree()));

    // the model must define a degree-n extension; a valuation coprime to n
    // somewhere guarantees it
    bool coprime = false;
    for (const auto& [dd, a] : val) {
        (void)dd;
        if (std::gcd<long>(std::labs(a), n) == 1 && a != 0) coprime = true;
    }
    if (!coprime) throw std::invalid_argument("y^n = f(x) does not define a degree-n function field here");

    long ram = 0;  // sum of (e-1) * deg(P') over ramified places
    for (const auto& [dp, a] : val) {
        const unsigned np = static_cast<unsigned>(std::gcd<long>(std::labs(a), n));
        const unsigned e = n / np;
        if (e > 1) ram += static_cast<long>(e - 1) * dp * np;  // residue degrees above P sum to np
    }
    const long two_g_minus_2 = -2L * static_cast<long>(n) + ram;
    if (two_g_minus_2 % 2 != 0 || two_g_minus_2 < -2) throw std::runtime_error("Riemann-Hurwitz bookkeeping failed");
    return static_cast<unsigned>((two_g_minus_2 + 2) / 2);
}

// ---------------------------------------------------------------------------
// curve loading
// ---------------------------------------------------------------------------

namespace detail {

inline const Field* parse_field_line(const std::string& line) {
    // "GF(p^m)" or "GF(p)" with optional " poly=c0,c1,..."
    std::size_t l = line.find("GF(");
    if (l == std::string::npos) throw std::invalid_argument("expected GF(p^m) in field line");
    std::size_t r = line.find(')', l);
    if (r == std::string::npos) throw std::invalid_argument("malformed field description");
    std::string inside = line.substr(l + 3, r - l - 3);
    unsigned p = 0, m = 1;
    std::size_t caret = inside.find('^');
    if (caret == std::string::npos) {
        p = static_cast<unsigned>(std::stoul(inside));
    } else {
        p = static_cast<unsigned>(std::stoul(inside.substr(0, caret)));
        m = static_cast<unsigned>(std::stoul(inside.substr(caret + 1)));
    }
    const Field* prime = Field::prime(p);
    if (m == 1) return prime;
    std::size_t pp = line.find("poly=", r);
    if (pp == std::string::npos) return Field::extension(prime, m);
    std::vector<fidx> mod;
    std::string rest = line.substr(pp + 5);
    std::istringstream is(rest);
    std::string tok;
    while (std::getline(is, tok, ',')) mod.push_back(static_cast<fidx>(std::stoul(tok)));
    if (mod.size() != m + 1) throw std::invalid_argument("defining polynomial length does not match the degree");
    return Field::extension(prime, mod);
}

}  // namespace detail

/// Curve-spec text: line `field GF(p^m) [poly=...]`, then either
/// `planar <homogeneous polynomial in x,y,z>` or `kummer n=<int> f=<poly in x>`,
/// optional `genus <int>` override (validated) and `label <name>`.
inline CurvePtr load_curve(const std::string& text, const std::string& default_label = "curve") {
    auto c = std::make_shared<Curve>();
    c->label = default_label;
    bool have_field = false, have_model = false;
    long genus_override = -1;

    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::istringstream ls(line);
        std::string keyword;
        if (!(ls >> keyword)) continue;
        std::string rest;
        std::getline(ls, rest);
        if (keyword == "field") {
            c->fq = detail::parse_field_line(rest);
            have_field = true;
        } else if (keyword == "label") {
            std::istringstream rs(rest);
            rs >> c->label;
        } else if (keyword == "genus") {
            genus_override = std::stol(rest);
        } else if (keyword == "planar") {
            if (!have_field) throw std::invalid_argument("field line must precede the model");
            c->model = Curve::Model::planar_smooth;
            c->poly = parse_form(c->fq, rest);
            have_model = true;
        } else if (keyword == "kummer") {
            if (!have_field) throw std::invalid_argument("field line must precede the model");
            c->model = Curve::Model::kummer_cover;
            std::size_t np = rest.find("n=");
            std::size_t fp = rest.find("f=");
            if (np == std::string::npos || fp == std::string::npos) throw std::invalid_argument("kummer line needs n= and f=");
            c->kummer_n = static_cast<unsigned>(std::stoul(rest.substr(np + 2)));
            c->kummer_f = parse_unipoly(c->fq, rest.substr(fp + 2));
            have_model = true;
        } else {
            throw std::invalid_argument("unknown curve-spec keyword: " + keyword);
        }
    }
    if (!have_field || !have_model) throw std::invalid_argument("curve spec needs a field line and a model line");

    if (c->is_planar()) {
        if (!c->poly.is_homogeneous() || c->poly.is_zero()) throw std::invalid_argument("planar model must be homogeneous and nonzero");
        if (!smoothness_check(c->fq, c->poly)) throw std::invalid_argument("planar model fails the smoothness check");
        const unsigned d = c->poly.degree();
        c->genus = (d - 1) * (d - 2) / 2;
    } else {
        if (std::gcd<std::uint64_t>(c->kummer_n, c->fq->size()) != 1) throw std::invalid_argument("kummer cover must be tame: gcd(n, q) = 1");
        if (c->kummer_f.is_zero()) throw std::invalid_argument("kummer cover requires f != 0");
        c->genus = kummer_genus(c->fq, c->kummer_n, c->kummer_f);
    }
    if (genus_override >= 0 && static_cast<unsigned>(genus_override) != c->genus)
        throw std::invalid_argument("declared genus does not match the computed genus");
    return c;
}

inline CurvePtr make_planar_curve(const Field* fq, const std::string& poly, const std::string& label) {
    std::ostringstream os;
    os << "field " << fq->describe() << "\nlabel " << label << "\nplanar " << poly << "\n";
    return load_curve(os.str(), label);
}

inline CurvePtr make_kummer_curve(const Field* fq, unsigned n, const std::string& f, const std::string& label) {
    std::ostringstream os;
    os << "field " << fq->describe() << "\nlabel " << label << "\nkummer n=" << n << " f=" << f << "\n";
    return load_curve(os.str(), label);
}

}  // namespace gagc

#endif
