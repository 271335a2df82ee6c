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

#ifndef GAGC_RROCH_HPP
#define GAGC_RROCH_HPP

#include <set>

#include "matrix.hpp"
#include "series.hpp"

namespace gagc {

/// Function on a curve as a ratio of homogeneous forms of equal degree.
struct RationalFunction {
    Form num, den;

    RationalFunction(Form n, Form d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::invalid_argument("zero denominator");
        if (!num.is_zero() && num.degree() != den.degree()) throw std::invalid_argument("numerator and denominator degrees differ");
    }
    const Field* field() const { return den.field(); }
    bool is_zero() const { return num.is_zero(); }

    std::string to_string() const { return "(" + num.to_string() + ") / (" + den.to_string() + ")"; }
};

/// v_P(num) - v_P(den).
inline long valuation(const CurvePtr& curve, const PlacePtr& place, const RationalFunction& f, unsigned cap = 4096) {
    if (f.is_zero()) throw std::invalid_argument("the zero function has no valuation");
    return form_valuation(curve, place, f.num, cap) - form_valuation(curve, place, f.den, cap);
}

/// Value of f at the canonical representative of P, as an element of
/// F_{q^deg P}. Falls back to leading series coefficients when numerator and
/// denominator both vanish at the representative; an actual pole throws.
inline Element evaluate(const CurvePtr& curve, const PlacePtr& place, const RationalFunction& f) {
    if (place->kind() != Place::Kind::planar) throw std::invalid_argument("evaluation needs the planar backend");
    const ProjPoint& rep = place->representative();
    const Field* K = rep.K;
    cvec dv = f.den.eval(K, rep.x, rep.y, rep.z);
    cvec nv = f.num.is_zero() ? K->zero() : f.num.eval(K, rep.x, rep.y, rep.z);
    if (!K->v_is_zero(dv)) return {K, K->v_div(nv, dv)};
    if (!K->v_is_zero(nv)) throw std::domain_error("pole at an evaluation place (support-disjointness violation)");
    if (f.num.is_zero()) return Element::zero(K);
    const long vden = form_valuation(curve, place, f.den);
    const long vnum = form_valuation(curve, place, f.num);
    if (vnum < vden) throw std::domain_error("pole at an evaluation place (support-disjointness violation)");
    if (vnum > vden) return Element::zero(K);
    auto exp = LocalExpansion::at(curve, place, static_cast<unsigned>(vden) + 1);
    Series sn = exp.form_series(f.num, static_cast<unsigned>(vden) + 1);
    Series sd = exp.form_series(f.den, static_cast<unsigned>(vden) + 1);
    return {K, K->v_div(sn.a[vden], sd.a[vden])};
}

/// Basis of L(G) with an explicit divisor and claimed dimension.
struct FunctionSpace {
    CurvePtr curve;
    Divisor G;
    std::vector<RationalFunction> basis;
    unsigned dim = 0;

    std::string to_text() const {
        std::ostringstream os;
        os << "dim " << dim << "\n";
        for (const auto& f : basis) os << f.num.to_string() << " / " << f.den.to_string() << "\n";
        return os.str();
    }
};

/// Every basis element satisfies v_P(f) >= -coeff_G(P) on supp(G).
inline bool valuation_contract_holds(const FunctionSpace& fs, unsigned cap = 4096) {
    for (const auto& [p, c] : fs.G.support())
        for (const auto& f : fs.basis)
            if (valuation(fs.curve, p, f, cap) < -c) return false;
    return true;
}

namespace detail {

inline std::vector<fidx> fq_coordinates(const Field* K, const Field* fq, const cvec& v) {
    if (K == fq) return {static_cast<fidx>(K->encode(v))};
    if (K->base() != fq) throw std::logic_error("coordinate field is not an extension of the code field");
    return {v.begin(), v.end()};
}

}  // namespace detail

/// Evaluation matrix of the basis at the given places, pi-expanded to F_q
/// columns (one column per coordinate of each place).
inline Mat evaluation_matrix(const FunctionSpace& fs, const std::vector<PlacePtr>& places) {
    const Field* fq = fs.curve->fq;
    std::size_t cols = 0;
    for (const auto& p : places) cols += p->degree();
    Mat m(fq, fs.basis.size(), cols);
    for (std::size_t i = 0; i < fs.basis.size(); ++i) {
        std::size_t j = 0;
        for (const auto& p : places) {
            Element v = evaluate(fs.curve, p, fs.basis[i]);
            for (fidx c : detail::fq_coordinates(v.field(), fq, v.coeffs())) m.at(i, j++) = c;
        }
    }
    return m;
}

/// Rank check at fresh places: accumulates places outside supp(G) until both
/// the place count reaches dim+g and the total degree exceeds deg(G_+).
inline bool independence_check(const FunctionSpace& fs, const std::vector<PlacePtr>& census_places) {
    if (fs.basis.empty()) return true;
    std::vector<PlacePtr> fresh;
    long total_deg = 0;
    const long need_deg = fs.G.positive_part().degree();
    const std::size_t need_count = fs.dim + fs.curve->genus;
    for (const auto& p : census_places) {
        if (p->kind() != Place::Kind::planar) continue;
        if (fs.G.coeff(p) != 0) continue;
        fresh.push_back(p);
        total_deg += p->degree();
        if (fresh.size() >= need_count && total_deg > need_deg) break;
    }
    if (fresh.size() < need_count || total_deg <= need_deg) throw std::invalid_argument("not enough fresh places for the independence check");
    return evaluation_matrix(fs, fresh).rank() == fs.basis.size();
}

// ---------------------------------------------------------------------------
// explicit one-point basis on Hermitian-shape curves
// ---------------------------------------------------------------------------

inline PlacePtr hermitian_infinity(const CurvePtr& curve) {
    const Field* fq = curve->fq;
    return frobenius_orbit(curve, ProjPoint{fq, fq->zero(), fq->one(), fq->zero()});
}

/// L(m * P_inf) on x^(q0+1) = y^q0 + y: the monomial basis
/// { x^i y^j / z^(i+j) : 0 <= i <= q0, i*q0 + j*(q0+1) <= m },
/// ordered by pole order at P_inf.
inline FunctionSpace hermitian_onepoint_basis(const CurvePtr& curve, unsigned m) {
    unsigned q0 = 0;
    if (!curve->hermitian_shape(q0)) throw std::invalid_argument("curve does not match the Hermitian one-point shape");
    const Field* fq = curve->fq;
    PlacePtr pinf = hermitian_infinity(curve);

    std::vector<std::pair<unsigned, std::pair<unsigned, unsigned>>> pole_orders;  // (i*q0 + j*(q0+1), (i, j))
    for (unsigned i = 0; i <= q0; ++i)
        for (unsigned j = 0; i * q0 + j * (q0 + 1) <= m; ++j) pole_orders.push_back({i * q0 + j * (q0 + 1), {i, j}});
    std::sort(pole_orders.begin(), pole_orders.end());

    FunctionSpace fs{curve, one_point_divisor(pinf, static_cast<long>(m)), {}, 0};
    for (const auto& [order, ij] : pole_orders) {
        (void)order;
        const auto [i, j] = ij;
        Form num(fq, {{Mono{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j), 0}, 1}});
        Form den(fq, {{Mono{0, 0, static_cast<std::uint16_t>(i + j)}, 1}});
        fs.basis.emplace_back(std::move(num), std::move(den));
    }
    fs.dim = static_cast<unsigned>(fs.basis.size());
    return fs;
}

/// Pole orders achievable at P_inf up to bound (the Weierstrass semigroup
/// of <q0, q0+1> intersected with [0, bound]).
inline std::vector<unsigned> hermitian_pole_orders(const CurvePtr& curve, unsigned bound) {
    unsigned q0 = 0;
    if (!curve->hermitian_shape(q0)) throw std::invalid_argument("curve does not match the Hermitian one-point shape");
    std::set<unsigned> orders;
    for (unsigned i = 0; i <= q0; ++i)
        for (unsigned j = 0; i * q0 + j * (q0 + 1) <= bound; ++j) orders.insert(i * q0 + j * (q0 + 1));
    return {orders.begin(), orders.end()};
}

// ---------------------------------------------------------------------------
// Brill-Noether solver on smooth plane curves
// ---------------------------------------------------------------------------

namespace detail {

/// Embedding of one canonical extension of fq into a larger one, fixed by
/// sending the generator to the canonically smallest root of its minimal
/// polynomial.
struct Embedding {
    const Field* from;
    const Field* to;
    std::vector<cvec> gen_powers;

    cvec apply(const cvec& v) const {
        cvec acc = to->zero();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i]) continue;
            acc = to->v_add(acc, to->v_mul(gen_powers[i], embed_up(Element(from->base(), from->base()->decode(v[i])), to).coeffs()));
        }
        return acc;
    }
};

inline Embedding make_embedding(const Field* from, const Field* to) {
    if (from == to) {
        Embedding e{from, to, {}};
        for (unsigned i = 0; i < from->degree(); ++i) {
            cvec p = to->zero();
            p[i] = 1;
            e.gen_powers.push_back(std::move(p));
        }
        return e;
    }
    if (from->base() != to->base()) throw std::invalid_argument("embedding requires extensions of a shared base");
    const Field* fq = from->base();
    std::vector<cvec> mod;
    for (fidx c : from->modulus()) mod.push_back(fq->decode(c));
    UniPoly def(fq, std::move(mod));
    auto roots = roots_in(def, to);
    if (roots.empty()) throw std::invalid_argument("embedding does not exist (degree does not divide)");
    const cvec rho = roots.front().first;
    Embedding e{from, to, {}};
    cvec p = to->one();
    for (unsigned i = 0; i < from->degree(); ++i) {
        e.gen_powers.push_back(p);
        p = to->v_mul(p, rho);
    }
    return e;
}

/// Monomials of total degree tau not divisible by the leading monomial of
/// the curve form (normal forms modulo the curve), descending order.
inline std::vector<Mono> normal_monomials(const Form& curve_poly, unsigned tau) {
    const Mono lt = curve_poly.leading_mono();
    std::vector<Mono> out;
    for (unsigned a = 0; a <= tau; ++a)
        for (unsigned b = 0; a + b <= tau; ++b) {
            unsigned c = tau - a - b;
            Mono m{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)};
            if (!lt.divides(m)) out.push_back(m);
        }
    std::sort(out.begin(), out.end(), [](const Mono& l, const Mono& r) { return mono_less(r, l); });
    return out;
}

struct ValuationCondition {
    PlacePtr place;
    long order;  // require v_P >= order, order >= 1
};

/// Kernel of the linear system "first `order` branch coefficients vanish at
/// every conditioned place", as forms in the normal-form monomial basis.
inline std::vector<Form> solve_valuation_system(const CurvePtr& curve, const std::vector<ValuationCondition>& conds,
                                                const std::vector<Mono>& monos) {
    const Field* fq = curve->fq;
    std::size_t rows = 0;
    for (const auto& c : conds) rows += static_cast<std::size_t>(c.order) * c.place->degree();
    Mat sys(fq, rows, monos.size());
    std::size_t r = 0;
    for (const auto& c : conds) {
        const unsigned need = static_cast<unsigned>(c.order);
        auto exp = LocalExpansion::at(curve, c.place, need);
        auto series = exp.monomial_series(monos, need);
        const Field* K = exp.coord_field();
        const unsigned D = c.place->degree();
        for (unsigned i = 0; i < need; ++i) {
            for (unsigned d = 0; d < D; ++d) {
                for (std::size_t j = 0; j < monos.size(); ++j) {
                    const cvec& coeff = series[j].a[i];
                    sys.at(r, j) = detail::fq_coordinates(K, fq, coeff)[d];
                }
                ++r;
            }
        }
    }
    auto kernel = sys.kernel_basis();
    std::vector<Form> out;
    out.reserve(kernel.size());
    for (const auto& v : kernel) {
        std::vector<std::pair<Mono, fidx>> terms;
        for (std::size_t j = 0; j < monos.size(); ++j)
            if (v[j]) terms.emplace_back(monos[j], v[j]);
        out.emplace_back(fq, std::move(terms));
    }
    return out;
}

/// Exact division test of dehomogenized forms: does the affine curve model
/// divide e (both monic-in-y coefficient polynomials over F_q[x])?
inline bool affine_divisible(const BiPoly& e, const BiPoly& f) {
    // f monic in y: ordinary division in (F_q[x])[y]
    const Field* k = f.field();
    if (e.is_zero()) return true;
    if (e.deg_y() < f.deg_y()) return false;
    std::vector<UniPoly> rem;
    for (int j = 0; j <= e.deg_y(); ++j) rem.push_back(e.row(j));
    for (int top = e.deg_y(); top >= f.deg_y(); --top) {
        UniPoly q = rem[top];  // f's leading y-coefficient is a nonzero scalar
        cvec lc = f.lc_y().coeff(0);
        q = q.scaled(k->v_inv(lc));
        for (int j = 0; j <= f.deg_y(); ++j) rem[top - f.deg_y() + j] = rem[top - f.deg_y() + j] - q * f.row(j);
        if (!rem[top].is_zero()) return false;
    }
    return std::all_of(rem.begin(), rem.end(), [](const UniPoly& p) { return p.is_zero(); });
}

}  // namespace detail

/// Intersection divisor of a form with the curve: resultant elimination,
/// factorization, root lifting to the needed extensions and per-branch
/// valuations; the total degree is checked against tau * deg(curve).
inline Divisor intersection_divisor(const CurvePtr& curve, const Form& E, unsigned valuation_cap) {
    if (!curve->is_planar()) throw std::invalid_argument("intersection divisors need the planar backend");
    if (E.is_zero()) throw std::invalid_argument("zero form");
    const Field* fq = curve->fq;
    const unsigned d = curve->plane_degree();
    const unsigned tau = E.degree();

    BiPoly f = dehomogenize(curve->poly, 2);
    if (f.lc_y().degree() != 0) throw std::invalid_argument("intersection solver expects a model monic in y");
    BiPoly e = dehomogenize(E, 2);
    if (detail::affine_divisible(e, f)) throw std::invalid_argument("form vanishes on the curve");

    Divisor div(curve);

    UniPoly R = resultant_y(f, e);
    if (R.is_zero()) throw std::logic_error("resultant vanished despite the divisibility check");
    if (R.degree() > 0) {
        for (const auto& [pfac, mult] : factor(R)) {
            (void)mult;
            const unsigned dx = static_cast<unsigned>(pfac.degree());
            const Field* Kx = Field::extension(fq, dx);
            const cvec x1 = roots_in(pfac, Kx).front().first;
            UniPoly fy = f.eval_x(Kx, x1);
            UniPoly ey = e.eval_x(Kx, x1);
            UniPoly gy = ey.is_zero() ? fy.monic() : gcd(fy, ey);
            if (gy.degree() < 1) continue;
            for (const auto& [h, hm] : factor(gy)) {
                (void)hm;
                const unsigned dy = static_cast<unsigned>(h.degree());
                const unsigned D = dx * dy;
                const Field* KD = Field::extension(fq, D);
                cvec x0, y0;
                if (D == dx) {
                    x0 = x1;
                    y0 = KD->v_neg(h.coeff(0));
                } else {
                    auto emb = detail::make_embedding(Kx, KD);
                    x0 = emb.apply(x1);
                    std::vector<cvec> hc;
                    for (int i = 0; i <= h.degree(); ++i) hc.push_back(emb.apply(h.coeff(i)));
                    UniPoly hK(KD, std::move(hc));
                    y0 = roots_in(hK, KD).front().first;
                }
                PlacePtr P = frobenius_orbit(curve, ProjPoint{KD, x0, y0, KD->one()});
                if (P->degree() != D) throw std::logic_error("intersection place degree mismatch");
                const long v = form_valuation(curve, P, E, valuation_cap);
                if (v <= 0) throw std::logic_error("intersection place with nonpositive valuation");
                div.add(P, v);
            }
        }
    }

    // points on the line z = 0
    UniPoly at_inf = detail::restrict_to_infinity(curve->poly, fq);
    if (at_inf.degree() >= 1) {
        for (const auto& [pfac, mult] : factor(at_inf)) {
            (void)mult;
            const Field* L = Field::extension(fq, static_cast<unsigned>(pfac.degree()));
            const cvec x0 = roots_in(pfac, L).front().first;
            PlacePtr P = frobenius_orbit(curve, ProjPoint{L, x0, L->one(), L->zero()});
            const cvec val = E.eval(L, P->representative().x, P->representative().y, P->representative().z);
            if (!L->v_is_zero(val)) continue;
            const long v = form_valuation(curve, P, E, valuation_cap);
            if (v > 0) div.add(P, v);
        }
    }
    {
        const cvec val100 = dehomogenize(curve->poly, 0).eval(fq, fq->zero(), fq->zero());
        if (fq->v_is_zero(val100)) {
            PlacePtr P = frobenius_orbit(curve, ProjPoint{fq, fq->one(), fq->zero(), fq->zero()});
            const cvec ev = E.eval(fq, fq->one(), fq->zero(), fq->zero());
            if (fq->v_is_zero(ev)) {
                const long v = form_valuation(curve, P, E, valuation_cap);
                if (v > 0) div.add(P, v);
            }
        }
    }

    if (div.degree() != static_cast<long>(tau) * static_cast<long>(d))
        throw std::logic_error("intersection divisor degree mismatch: got " + std::to_string(div.degree()) + ", expected " +
                               std::to_string(static_cast<long>(tau) * d));
    return div;
}

struct BrillNoetherOptions {
    unsigned retries = 1;  // extra tau bumps after the first attempt
};

/// L(G) for a divisor supported on places of the smooth plane curve:
/// auxiliary form E0 vanishing on G_+, residual divisor D0 = (E0) - G_+,
/// then all forms E with (E) >= D0 + G_-; the basis is { E / E0 }.
inline FunctionSpace brill_noether_basis(const CurvePtr& curve, const Divisor& G, const BrillNoetherOptions& opts = {}) {
    if (!curve->is_planar()) throw std::invalid_argument("the Brill-Noether solver needs a smooth plane model");
    if (G.curve()->signature() != curve->signature()) throw std::invalid_argument("divisor lives on a different curve");
    const unsigned d = curve->plane_degree();
    const unsigned g = curve->genus;

    const Divisor Gp = G.positive_part();
    const Divisor Gm = G.negative_part();
    const long degG = G.degree();

    unsigned tau = static_cast<unsigned>((Gp.degree() + 2 * static_cast<long>(g) + 1 + d - 1) / d);
    std::string last_error;
    for (unsigned attempt = 0; attempt <= opts.retries; ++attempt, ++tau) {
        const unsigned cap = 8 * tau * d;
        const auto monos = detail::normal_monomials(curve->poly, tau);

        std::vector<detail::ValuationCondition> conds;
        for (const auto& [p, c] : Gp.support()) conds.push_back({p, c});
        auto e0_candidates = detail::solve_valuation_system(curve, conds, monos);
        if (e0_candidates.empty()) {
            last_error = "no auxiliary form at tau=" + std::to_string(tau);
            continue;
        }
        const BiPoly f_affine = dehomogenize(curve->poly, 2);
        const Form* E0 = nullptr;
        for (const auto& cand : e0_candidates) {
            if (!detail::affine_divisible(dehomogenize(cand, 2), f_affine)) {
                E0 = &cand;
                break;
            }
        }
        if (!E0) {
            last_error = "all auxiliary forms vanish on the curve at tau=" + std::to_string(tau);
            continue;
        }

        Divisor D0 = intersection_divisor(curve, *E0, cap) - Gp;
        if (!D0.is_effective()) throw std::logic_error("residual divisor is not effective");

        Divisor req = D0 + Gm;
        std::vector<detail::ValuationCondition> conds2;
        for (const auto& [p, c] : req.support()) conds2.push_back({p, c});
        auto basis_forms = detail::solve_valuation_system(curve, conds2, monos);

        FunctionSpace fs{curve, G, {}, 0};
        for (const auto& Ei : basis_forms) fs.basis.emplace_back(Ei, *E0);
        fs.dim = static_cast<unsigned>(fs.basis.size());

        const long lower = degG - static_cast<long>(g) + 1;
        bool dim_ok = degG >= 2 * static_cast<long>(g) - 1 ? static_cast<long>(fs.dim) == lower
                                                           : static_cast<long>(fs.dim) >= std::max<long>(lower, 0);
        if (degG < 0) dim_ok = fs.dim == 0;
        if (!dim_ok) {
            last_error = "dimension check failed at tau=" + std::to_string(tau) + ": got " + std::to_string(fs.dim);
            continue;
        }
        if (!valuation_contract_holds(fs, cap)) {
            last_error = "valuation contract failed at tau=" + std::to_string(tau);
            continue;
        }
        return fs;
    }
    throw solver_error("Riemann-Roch solver incomplete: " + last_error);
}

}  // namespace gagc

#endif
