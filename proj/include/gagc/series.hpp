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

#ifndef GAGC_SERIES_HPP
#define GAGC_SERIES_HPP

#include "divisor.hpp"

namespace gagc {

/// Truncated power series in the uniformizer t over a coordinate field.
struct Series {
    const Field* K = nullptr;
    std::vector<cvec> a;  // a[i] is the t^i coefficient; a.size() is the precision

    static Series zeros(const Field* K, unsigned prec) { return {K, std::vector<cvec>(prec, K->zero())}; }
    static Series constant(const Field* K, const cvec& c, unsigned prec) {
        Series s = zeros(K, prec);
        if (prec) s.a[0] = c;
        return s;
    }

    unsigned precision() const { return static_cast<unsigned>(a.size()); }

    Series truncated(unsigned prec) const {
        Series s{K, {a.begin(), a.begin() + std::min<std::size_t>(prec, a.size())}};
        while (s.a.size() < prec) s.a.push_back(K->zero());
        return s;
    }

    Series operator+(const Series& o) const {
        Series r = zeros(K, std::min(precision(), o.precision()));
        for (unsigned i = 0; i < r.precision(); ++i) r.a[i] = K->v_add(a[i], o.a[i]);
        return r;
    }
    Series operator*(const Series& o) const {
        const unsigned prec = std::min(precision(), o.precision());
        Series r = zeros(K, prec);
        for (unsigned i = 0; i < prec; ++i) {
            if (K->v_is_zero(a[i])) continue;
            for (unsigned j = 0; j + i < prec; ++j) {
                if (K->v_is_zero(o.a[j])) continue;
                r.a[i + j] = K->v_add(r.a[i + j], K->v_mul(a[i], o.a[j]));
            }
        }
        return r;
    }
    Series scaled(const cvec& c) const {
        Series r = zeros(K, precision());
        for (unsigned i = 0; i < precision(); ++i) r.a[i] = K->v_mul(a[i], c);
        return r;
    }

    /// Index of the lowest nonzero coefficient, or -1 if none up to precision.
    long lowest_nonzero() const {
        for (unsigned i = 0; i < precision(); ++i)
            if (!K->v_is_zero(a[i])) return static_cast<long>(i);
        return -1;
    }
};

/// Branch expansion of a smooth curve at a place: one chart coordinate is
/// a + t, the other is solved as a power series in t by successive
/// undetermined coefficients.
class LocalExpansion {
   public:
    /// chart: projective coordinate set to 1 (0=x, 1=y, 2=z).
    /// param_is_u: the chart pair is (u, v); when true, u = a + t and v is
    /// the series, otherwise v = a + t and u is the series.
    static LocalExpansion at(const CurvePtr& curve, const PlacePtr& place, unsigned prec) {
        if (place->kind() != Place::Kind::planar) throw std::invalid_argument("expansions need the planar backend");
        LocalExpansion e;
        e.curve_ = curve;
        e.place_ = place;
        e.prec_ = prec;
        const ProjPoint& rep = place->representative();
        const Field* K = rep.K;
        e.K_ = K;

        if (!K->v_is_zero(rep.z))
            e.chart_ = 2;
        else if (!K->v_is_zero(rep.y))
            e.chart_ = 1;
        else
            e.chart_ = 0;

        const BiPoly model = dehomogenize(curve->poly, e.chart_);
        cvec u0, v0;
        if (e.chart_ == 2) {
            u0 = rep.x;
            v0 = rep.y;
        } else if (e.chart_ == 1) {
            u0 = rep.x;
            v0 = rep.z;
        } else {
            u0 = rep.y;
            v0 = rep.z;
        }

        const cvec cu = model.d_dx().eval(K, u0, v0);
        const cvec cv = model.d_dy().eval(K, u0, v0);
        if (!K->v_is_zero(cv)) {
            e.param_is_u_ = true;
            e.a_ = u0;
            e.dep_ = solve_branch(model, K, u0, v0, prec);
        } else if (!K->v_is_zero(cu)) {
            e.param_is_u_ = false;
            e.a_ = v0;
            e.dep_ = solve_branch(transpose(model), K, v0, u0, prec);
        } else {
            throw std::invalid_argument("expansion at a singular point");
        }
        return e;
    }

    const PlacePtr& place() const { return place_; }
    const Field* coord_field() const { return K_; }
    unsigned precision() const { return prec_; }
    int chart() const { return chart_; }

    /// Series of the projective coordinate (0=x, 1=y, 2=z) at precision prec.
    Series coord(int proj, unsigned prec) const {
        if (prec > prec_) throw std::invalid_argument("requested precision exceeds the expansion");
        if (proj == chart_) return Series::constant(K_, K_->one(), prec);
        // chart pair order: chart 2 -> (x, y), chart 1 -> (x, z), chart 0 -> (y, z)
        int u_proj = chart_ == 0 ? 1 : 0;
        bool is_u = proj == u_proj;
        bool is_param = is_u == param_is_u_;
        if (is_param) {
            Series s = Series::constant(K_, a_, prec);
            if (prec > 1) s.a[1] = K_->one();
            return s;
        }
        Series s = Series::zeros(K_, prec);
        for (unsigned i = 0; i < prec && i < dep_.size(); ++i) s.a[i] = dep_[i];
        return s;
    }

    /// Series of a form along the branch (coefficients lifted into K).
    Series form_series(const Form& F, unsigned prec) const {
        std::vector<Series> one{Series::constant(K_, K_->one(), prec)};
        auto series = monomial_series(extract_monos(F), prec);
        Series acc = Series::zeros(K_, prec);
        std::size_t i = 0;
        for (const auto& [m, c] : F.terms()) {
            (void)m;
            cvec cc = embed_up(Element(F.field(), F.field()->decode(c)), K_).coeffs();
            acc = acc + series[i].scaled(cc);
            ++i;
        }
        return acc;
    }

    /// Batch of monomial branch series with shared power tables.
    std::vector<Series> monomial_series(const std::vector<Mono>& monos, unsigned prec) const {
        unsigned ma = 0, mb = 0, mc = 0;
        for (const auto& m : monos) {
            ma = std::max<unsigned>(ma, m.a);
            mb = std::max<unsigned>(mb, m.b);
            mc = std::max<unsigned>(mc, m.c);
        }
        auto powers = [&](int proj, unsigned n) {
            std::vector<Series> p;
            p.reserve(n + 1);
            p.push_back(Series::constant(K_, K_->one(), prec));
            if (n >= 1) {
                Series base = coord(proj, prec);
                p.push_back(base);
                for (unsigned i = 2; i <= n; ++i) p.push_back(p.back() * base);
            }
            return p;
        };
        auto px = powers(0, ma), py = powers(1, mb), pz = powers(2, mc);
        std::vector<Series> out;
        out.reserve(monos.size());
        for (const auto& m : monos) out.push_back(px[m.a] * py[m.b] * pz[m.c]);
        return out;
    }

   private:
    LocalExpansion() = default;

    static std::vector<Mono> extract_monos(const Form& F) {
        std::vector<Mono> m;
        m.reserve(F.terms().size());
        for (const auto& [mm, c] : F.terms()) {
            (void)c;
            m.push_back(mm);
        }
        return m;
    }

    static BiPoly transpose(const BiPoly& b) {
        const Field* k = b.field();
        std::vector<std::vector<cvec>> grid;  // [new y = old x][new x = old y]
        for (int j = 0; j <= b.deg_y(); ++j)
            for (int i = 0; i <= b.row(j).degree(); ++i) {
                cvec c = b.row(j).coeff(i);
                if (k->v_is_zero(c)) continue;
                if (grid.size() <= static_cast<std::size_t>(i)) grid.resize(i + 1);
                auto& row = grid[i];
                if (row.size() <= static_cast<std::size_t>(j)) row.resize(j + 1, k->zero());
                row[j] = std::move(c);
            }
        std::vector<UniPoly> rows;
        rows.reserve(grid.size());
        for (auto& r : grid) rows.emplace_back(k, std::move(r));
        return BiPoly(k, std::move(rows));
    }

    /// Solve c(a + t, S(t)) = 0 for S with S(0) = b, assuming dc/dv(a,b) != 0.
    static std::vector<cvec> solve_branch(const BiPoly& model, const Field* K, const cvec& a, const cvec& b, unsigned prec) {
        const cvec cv = model.d_dy().eval(K, a, b);
        if (K->v_is_zero(cv)) throw std::logic_error("branch solver needs a unit derivative");
        const cvec cv_inv = K->v_inv(cv);
        // rows of the model evaluated at the series u = a + t, precomputed
        std::vector<Series> rows_at_u;
        {
            Series u = Series::constant(K, a, prec);
            if (prec > 1) u.a[1] = K->one();
            for (int j = 0; j <= model.deg_y(); ++j) {
                const UniPoly r = model.row(j).lift_to(K);
                // Horner in u
                Series acc = Series::zeros(K, prec);
                for (int i = r.degree(); i >= 0; --i) {
                    acc = acc * u;
                    acc.a[0] = K->v_add(acc.a[0], r.coeff(i));
                }
                if (r.degree() < 0) acc = Series::zeros(K, prec);
                rows_at_u.push_back(std::move(acc));
            }
        }
        std::vector<cvec> s(prec, K->zero());
        if (prec == 0) return s;
        s[0] = b;
        for (unsigned i = 1; i < prec; ++i) {
            // evaluate the model at the partial series, to precision i+1
            Series S{K, std::vector<cvec>(s.begin(), s.begin() + i)};
            S = S.truncated(i + 1);
            Series acc = Series::zeros(K, i + 1);
            for (int j = model.deg_y(); j >= 0; --j) {
                acc = acc * S;
                acc = acc + rows_at_u[j].truncated(i + 1);
            }
            // coefficient of t^i must cancel: s_i = -acc_i / cv
            s[i] = K->v_neg(K->v_mul(acc.a[i], cv_inv));
        }
        return s;
    }

    CurvePtr curve_;
    PlacePtr place_;
    const Field* K_ = nullptr;
    unsigned prec_ = 0;
    int chart_ = 2;
    bool param_is_u_ = true;
    cvec a_;                 // value of the parameter coordinate at the point
    std::vector<cvec> dep_;  // series of the dependent coordinate
};

/// Order of vanishing of a form along the branch at P; precision is raised
/// until the leading term resolves, up to `cap`.
inline long form_valuation(const CurvePtr& curve, const PlacePtr& place, const Form& F, unsigned cap = 4096) {
    if (F.is_zero()) throw std::invalid_argument("the zero form has no valuation");
    unsigned prec = 16;
    for (;;) {
        if (prec > cap) prec = cap;
        auto exp = LocalExpansion::at(curve, place, prec);
        Series s = exp.form_series(F, prec);
        long v = s.lowest_nonzero();
        if (v >= 0) return v;
        if (prec >= cap) throw solver_error("valuation did not resolve below the precision cap (form may vanish on the curve)");
        prec *= 2;
    }
}

}  // namespace gagc

#endif
