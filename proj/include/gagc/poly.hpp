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

#ifndef GAGC_POLY_HPP
#define GAGC_POLY_HPP

#include <cmath>
#include <random>

#include "field.hpp"

namespace gagc {

/// Univariate polynomial over a constructed field, dense low-to-high
/// coefficients, leading coefficient nonzero unless zero polynomial.
class UniPoly {
   public:
    explicit UniPoly(const Field* k) : k_(k) {}
    UniPoly(const Field* k, std::vector<cvec> coeffs) : k_(k), c_(std::move(coeffs)) { trim(); }

    static UniPoly zero(const Field* k) { return UniPoly(k); }
    static UniPoly constant(const Field* k, cvec v) { return UniPoly(k, {std::move(v)}); }
    static UniPoly one(const Field* k) { return constant(k, k->one()); }
    static UniPoly x(const Field* k) { return UniPoly(k, {k->zero(), k->one()}); }
    static UniPoly monomial(const Field* k, unsigned d, cvec coeff) {
        std::vector<cvec> c(d + 1, k->zero());
        c[d] = std::move(coeff);
        return UniPoly(k, std::move(c));
    }

    const Field* field() const { return k_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && k_->v_is_one(c_[0]); }
    cvec coeff(std::size_t i) const {
        if (i < c_.size()) return c_[i];
        return k_->zero();
    }
    const cvec& lc() const {
        if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }
    void set_coeff(std::size_t i, cvec v) {
        if (i >= c_.size()) c_.resize(i + 1, k_->zero());
        c_[i] = std::move(v);
        trim();
    }

    bool operator==(const UniPoly& o) const { return k_ == o.k_ && c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly operator+(const UniPoly& o) const {
        check(o);
        std::vector<cvec> r(std::max(c_.size(), o.c_.size()), k_->zero());
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i < c_.size() && i < o.c_.size())
                r[i] = k_->v_add(c_[i], o.c_[i]);
            else if (i < c_.size())
                r[i] = c_[i];
            else
                r[i] = o.c_[i];
        }
        return UniPoly(k_, std::move(r));
    }
    UniPoly operator-(const UniPoly& o) const {
        check(o);
        std::vector<cvec> r(std::max(c_.size(), o.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) {
            cvec a = i < c_.size() ? c_[i] : k_->zero();
            if (i < o.c_.size())
                r[i] = k_->v_sub(a, o.c_[i]);
            else
                r[i] = std::move(a);
        }
        return UniPoly(k_, std::move(r));
    }
    UniPoly operator*(const UniPoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return UniPoly(k_);
        std::vector<cvec> r(c_.size() + o.c_.size() - 1, k_->zero());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (k_->v_is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                if (k_->v_is_zero(o.c_[j])) continue;
                r[i + j] = k_->v_add(r[i + j], k_->v_mul(c_[i], o.c_[j]));
            }
        }
        return UniPoly(k_, std::move(r));
    }
    UniPoly scaled(const cvec& s) const {
        std::vector<cvec> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = k_->v_mul(c_[i], s);
        return UniPoly(k_, std::move(r));
    }

    /// Euclidean division; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const {
        check(d);
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        UniPoly r = *this;
        if (r.degree() < d.degree()) return {UniPoly(k_), std::move(r)};
        const cvec li = k_->v_inv(d.lc());
        std::vector<cvec> q(r.c_.size() - d.c_.size() + 1, k_->zero());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const std::size_t off = r.c_.size() - d.c_.size();
            cvec f = k_->v_mul(r.c_.back(), li);
            q[off] = f;
            for (std::size_t j = 0; j + 1 < d.c_.size(); ++j)
                if (!k_->v_is_zero(d.c_[j])) r.c_[off + j] = k_->v_sub(r.c_[off + j], k_->v_mul(f, d.c_[j]));
            r.c_.pop_back();
            r.trim();
        }
        return {UniPoly(k_, std::move(q)), std::move(r)};
    }
    UniPoly operator/(const UniPoly& d) const { return divrem(d).first; }
    UniPoly operator%(const UniPoly& d) const { return divrem(d).second; }

    UniPoly monic() const {
        if (is_zero() || k_->v_is_one(lc())) return *this;
        return scaled(k_->v_inv(lc()));
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly(k_);
        std::vector<cvec> r(c_.size() - 1, k_->zero());
        for (std::size_t i = 1; i < c_.size(); ++i) {
            cvec m = k_->zero();
            // i * c_i via repeated addition of c_i (characteristic arithmetic)
            unsigned mult = static_cast<unsigned>(i % k_->characteristic());
            for (unsigned j = 0; j < mult; ++j) m = k_->v_add(m, c_[i]);
            r[i - 1] = std::move(m);
        }
        return UniPoly(k_, std::move(r));
    }

    cvec eval(const cvec& a) const {
        cvec r = k_->zero();
        for (std::size_t i = c_.size(); i-- > 0;) r = k_->v_add(k_->v_mul(r, a), c_[i]);
        return r;
    }

    /// Coefficient-wise lift into an extension built over this coefficient
    /// field (or over an ancestor chain containing it).
    UniPoly lift_to(const Field* K) const {
        if (K == k_) return *this;
        std::vector<cvec> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = embed_up(Element(k_, c_[i]), K).coeffs();
        return UniPoly(K, std::move(r));
    }

    UniPoly powmod(std::uint64_t e, const UniPoly& m) const {
        UniPoly r = one(k_);
        UniPoly b = *this % m;
        while (e) {
            if (e & 1) r = (r * b) % m;
            b = (b * b) % m;
            e >>= 1;
        }
        return r;
    }

    std::string to_string(const std::string& var = "x") const;

   private:
    void check(const UniPoly& o) const {
        if (k_ != o.k_) throw std::invalid_argument("coefficient field mismatch");
    }
    void trim() {
        while (!c_.empty() && k_->v_is_zero(c_.back())) c_.pop_back();
    }
    const Field* k_;
    std::vector<cvec> c_;
};

inline std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (k_->v_is_zero(c_[i])) continue;
        if (!first) os << "+";
        first = false;
        const std::uint64_t code = k_->encode(c_[i]);
        if (i == 0 || code != 1) os << code;
        if (i > 0) {
            if (code != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& f) { return os << f.to_string(); }

/// Monic gcd; gcd(f, 0) is the monic scalar multiple of f.
inline UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.field() != b.field()) throw std::invalid_argument("coefficient field mismatch");
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f % g;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

/// Rabin-style criterion: gcd(f, x^(Q^i) - x) trivial for i <= deg/2
/// and x^(Q^deg) == x (mod f).
inline bool is_irreducible(const UniPoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("irreducibility is undefined for constants");
    const Field* k = f.field();
    const int n = f.degree();
    if (n == 1) return true;
    const std::uint64_t q = k->size();
    const UniPoly fm = f.monic();
    UniPoly h = UniPoly::x(k) % fm;
    for (int i = 1; i <= n; ++i) {
        h = h.powmod(q, fm);
        if (i <= n / 2) {
            UniPoly g = gcd(fm, h - UniPoly::x(k));
            if (g.degree() != 0) return false;
        }
    }
    return (h - UniPoly::x(k)).is_zero();
}

namespace detail {

inline cvec element_pth_root(const Field* k, const cvec& a) {
    // Frobenius x -> x^p is bijective; inverse is x -> x^(|k|/p)
    return k->v_pow(a, k->size() / k->characteristic());
}

inline UniPoly poly_pth_root(const UniPoly& f) {
    const Field* k = f.field();
    const unsigned p = k->characteristic();
    std::vector<cvec> r;
    for (int i = 0; i <= f.degree(); i += p) r.push_back(element_pth_root(k, f.coeff(i)));
    return UniPoly(k, std::move(r));
}

/// Distinct-degree split of a monic squarefree polynomial.
inline std::vector<std::pair<UniPoly, int>> ddf(UniPoly f) {
    const Field* k = f.field();
    const std::uint64_t q = k->size();
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly h = UniPoly::x(k) % f;
    int i = 0;
    while (f.degree() >= 2 * (i + 1)) {
        ++i;
        h = h.powmod(q, f);
        UniPoly g = gcd(f, h - UniPoly::x(k));
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

/// Equal-degree split (Cantor-Zassenhaus; trace construction in char 2).
inline void edf(const UniPoly& f, int d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
    const Field* k = f.field();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const std::uint64_t q = k->size();
    for (;;) {
        // random polynomial of degree < deg f
        std::vector<cvec> rc(f.degree(), k->zero());
        for (auto& c : rc) c = k->decode(rng() % q);
        UniPoly r(k, std::move(rc));
        if (r.is_zero()) continue;
        UniPoly g = gcd(f, r);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(f / g, d, rng, out);
            return;
        }
        UniPoly split(k);
        if (k->characteristic() == 2) {
            // trace map to F_2 of the quotient algebra
            unsigned bits = 0;
            std::uint64_t s = q;
            while (s > 1) s >>= 1, ++bits;
            UniPoly t = r % f, acc = t;
            for (unsigned j = 1; j < bits * static_cast<unsigned>(d); ++j) {
                t = (t * t) % f;
                acc = acc + t;
            }
            split = acc;
        } else {
            unsigned __int128 qe = 1;
            for (int j = 0; j < d; ++j) {
                qe *= q;
                if (qe > (static_cast<unsigned __int128>(1) << 126)) throw std::overflow_error("field too large for equal-degree splitting");
            }
            std::uint64_t e = static_cast<std::uint64_t>((qe - 1) / 2);
            split = r.powmod(e, f) - UniPoly::one(k);
        }
        g = gcd(f, split);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            edf(f / g, d, rng, out);
            return;
        }
    }
}

}  // namespace detail

/// Full factorization into monic irreducibles with multiplicities.
/// Randomized splitting is seeded; the canonical post-sort (degree, then
/// coefficient encodings high-to-low) makes the result seed-independent.
inline std::vector<std::pair<UniPoly, int>> factor(const UniPoly& input, std::uint64_t seed = kDefaultSeed) {
    if (input.degree() < 1) throw std::invalid_argument("cannot factor a constant");
    const Field* k = input.field();
    std::mt19937_64 rng(seed);
    std::vector<std::pair<UniPoly, int>> result;

    // squarefree decomposition (characteristic p)
    std::vector<std::pair<UniPoly, int>> sqf;  // (squarefree part, multiplicity)
    std::function<void(UniPoly, int)> decompose = [&](UniPoly f, int outer) {
        f = f.monic();
        UniPoly fp = f.derivative();
        if (fp.is_zero()) {
            decompose(detail::poly_pth_root(f), outer * static_cast<int>(k->characteristic()));
            return;
        }
        UniPoly c = gcd(f, fp);
        UniPoly w = f / c;
        int i = 1;
        while (!w.is_one()) {
            UniPoly y = gcd(w, c);
            UniPoly z = w / y;
            if (z.degree() > 0) sqf.emplace_back(z, outer * i);
            ++i;
            w = std::move(y);
            c = c / w;
        }
        if (c.degree() > 0) decompose(detail::poly_pth_root(c), outer * static_cast<int>(k->characteristic()));
    };
    decompose(input, 1);

    for (const auto& [part, mult] : sqf) {
        for (const auto& [g, d] : detail::ddf(part)) {
            std::vector<UniPoly> irr;
            detail::edf(g, d, rng, irr);
            for (auto& f : irr) result.emplace_back(std::move(f), mult);
        }
    }

    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        const Field* k2 = a.first.field();
        for (int i = a.first.degree(); i >= 0; --i) {
            std::uint64_t ca = k2->encode(a.first.coeff(i)), cb = k2->encode(b.first.coeff(i));
            if (ca != cb) return ca < cb;
        }
        return a.second < b.second;
    });
    return result;
}

/// All roots of f in K (an extension of, or equal to, the coefficient
/// field's tower), sorted by element encoding, with multiplicities.
inline std::vector<std::pair<cvec, int>> roots_in(const UniPoly& f, const Field* K, std::uint64_t seed = kDefaultSeed) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    UniPoly g = f.lift_to(K);
    std::vector<std::pair<cvec, int>> out;
    if (g.degree() < 1) return out;

    std::vector<cvec> roots;
    if (K->size_fits() && K->size() <= 4096) {
        for (std::uint64_t i = 0; i < K->size(); ++i) {
            cvec a = K->decode(i);
            if (K->v_is_zero(g.eval(a))) roots.push_back(std::move(a));
        }
    } else {
        if (!K->size_fits()) throw budget_error("root finding beyond 2^62-size fields is unsupported");
        UniPoly xq = UniPoly::x(K).powmod(K->size(), g.monic());
        UniPoly lin = gcd(g, xq - UniPoly::x(K));
        if (lin.degree() > 0) {
            std::mt19937_64 rng(seed);
            std::vector<UniPoly> irr;
            detail::edf(lin.monic(), 1, rng, irr);
            for (const auto& l : irr) roots.push_back(K->v_neg(l.coeff(0)));
        }
    }
    std::sort(roots.begin(), roots.end(), [&](const cvec& a, const cvec& b) { return K->encode(a) < K->encode(b); });
    for (const auto& r : roots) {
        int mult = 0;
        UniPoly lin(K, {K->v_neg(r), K->one()});
        UniPoly rest = g;
        for (;;) {
            auto [q, rem] = rest.divrem(lin);
            if (!rem.is_zero()) break;
            ++mult;
            rest = std::move(q);
            if (rest.degree() < 1) break;
        }
        out.emplace_back(r, mult);
    }
    return out;
}

/// All solutions of z^n = c in K, via discrete logs (K indexable).
inline std::vector<cvec> all_nth_roots(const Field* K, const cvec& c, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("zeroth roots undefined");
    std::vector<cvec> out;
    if (K->v_is_zero(c)) {
        out.push_back(K->zero());
        return out;
    }
    if (!K->indexable()) throw budget_error("nth roots need an indexable field");
    const std::uint64_t m = K->size() - 1;
    const fidx a = static_cast<fidx>(K->encode(c));
    const std::uint64_t s = K->discrete_log(a);
    const std::uint64_t g = std::gcd(n % m == 0 ? m : n % m, m);
    if (s % g != 0) return out;  // not an n-th power
    // solve n*x == s (mod m)
    const std::uint64_t n_red = (n % m + m) % m;
    const std::uint64_t mg = m / g;
    // (n/g)^{-1} mod (m/g)
    std::uint64_t ninv = 1;
    {
        std::int64_t t0 = 0, t1 = 1;
        std::int64_t r0 = static_cast<std::int64_t>(mg), r1 = static_cast<std::int64_t>((n_red / g) % mg);
        while (r1 != 0) {
            std::int64_t qq = r0 / r1;
            std::int64_t tmp = r0 - qq * r1;
            r0 = r1;
            r1 = tmp;
            tmp = t0 - qq * t1;
            t0 = t1;
            t1 = tmp;
        }
        ninv = static_cast<std::uint64_t>((t0 % static_cast<std::int64_t>(mg) + static_cast<std::int64_t>(mg)) % static_cast<std::int64_t>(mg));
    }
    const std::uint64_t x0 = detail::mulmod_u64(s / g % mg, ninv, mg);
    const fidx gen = K->primitive_element();
    for (std::uint64_t j = 0; j < g; ++j) {
        fidx z = K->pow(gen, (x0 + j * mg) % m);
        out.push_back(K->decode(z));
    }
    std::sort(out.begin(), out.end(), [&](const cvec& x, const cvec& y) { return K->encode(x) < K->encode(y); });
    return out;
}

/// Newton interpolation through (points[i], values[i]); points distinct.
inline UniPoly interpolate(const Field* k, const std::vector<cvec>& points, const std::vector<cvec>& values) {
    if (points.size() != values.size() || points.empty()) throw std::invalid_argument("interpolation data mismatch");
    const std::size_t n = points.size();
    std::vector<cvec> dd = values;  // divided differences, computed in place
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            cvec num = k->v_sub(dd[i], dd[i - 1]);
            cvec den = k->v_sub(points[i], points[i - level]);
            dd[i] = k->v_div(num, den);
            if (i == level) break;
        }
    }
    UniPoly result = UniPoly::constant(k, dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        UniPoly lin(k, {k->v_neg(points[i]), k->one()});
        result = result * lin + UniPoly::constant(k, dd[i]);
    }
    return result;
}

}  // namespace gagc

#endif
